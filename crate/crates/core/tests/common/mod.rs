//! Reference computations for tests. Nothing here calls the library's linear
//! algebra or resolution code.

#![allow(dead_code)]

/// Rank over GF(p) by plain Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let factor = rows[r][c];
                for k in c..cols {
                    rows[r][k] = (rows[r][k] + p * p - factor * rows[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `dim Ae_i · dim e_jA` for the Cartan matrix `c[i][j] = dim e_iAe_j`.
pub fn projective_dim(cartan: &[Vec<usize>], i: usize, j: usize) -> usize {
    let into_i: usize = cartan.iter().map(|row| row[i]).sum();
    let out_of_j: usize = cartan[j].iter().sum();
    into_i * out_of_j
}

/// Dimensions of `Ω⁰ = A, Ω¹, …` along an exact sequence with terms `dim_p`.
pub fn syzygy_chain(dim_a: usize, dim_p: &[usize]) -> Option<Vec<usize>> {
    let mut out = vec![dim_a];
    for p in dim_p {
        out.push(p.checked_sub(*out.last().unwrap())?);
    }
    Some(out)
}

/// HH dimensions of the semisimple algebra `K^n`.
pub fn semisimple_hh(n: usize) -> [usize; 3] {
    [n, 0, 0]
}

#[test]
fn reference_rank() {
    assert_eq!(rank_mod_p(vec![vec![1, 2], vec![2, 4]], 5), 1);
    assert_eq!(rank_mod_p(vec![vec![1, 2], vec![2, 4]], 7), 1);
    assert_eq!(rank_mod_p(vec![vec![1, 1], vec![1, 3]], 2), 1);
    assert_eq!(rank_mod_p(vec![vec![1, 1], vec![1, 3]], 3), 2);
    assert_eq!(syzygy_chain(12, &[72, 144]), Some(vec![12, 60, 84]));
}
