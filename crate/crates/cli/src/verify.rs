use crate::source::{from_catalog, Failure};
use hochcalc_core::catalog::{self, CatalogEntry};
use hochcalc_core::engine::BuildOptions;
use hochcalc_core::fields::FieldSpec;
use hochcalc_core::oracle::DEFAULT_GUARD;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub struct Row {
    pub entry: &'static str,
    pub field: String,
    pub computed: Option<[usize; 3]>,
    pub problems: Vec<String>,
    pub oracle_disagrees: bool,
}

impl Row {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "entry": self.entry,
            "field": self.field,
            "hh": self.computed,
            "pass": self.passed(),
            "problems": self.problems,
        })
    }
}

fn usize_of(v: &Value) -> Option<usize> {
    v.as_u64().map(|x| x as usize)
}

fn check<T: PartialEq + std::fmt::Debug>(problems: &mut Vec<String>, what: &str, expected: T, computed: T) {
    if expected != computed {
        problems.push(format!("{what}: expected {expected:?}, computed {computed:?}"));
    }
}

fn run_one(entry: &'static CatalogEntry, table: &Value, field: FieldSpec, oracle: bool) -> Row {
    let mut row = Row {
        entry: entry.name,
        field: field.to_string(),
        computed: None,
        problems: Vec::new(),
        oracle_disagrees: false,
    };
    let record = &table[entry.name];
    let class = serde_json::to_value(field.char_class()).expect("serialisable");
    let expected = &record["expectations"][class.as_str().unwrap_or_default()];
    let alg = match from_catalog(entry.name, Some(field.clone()), &BTreeMap::new()).and_then(|l| l.build(BuildOptions::default())) {
        Ok(a) => a,
        Err(e) => {
            row.problems.push(format!("build: {}", e.message()));
            return row;
        }
    };
    if let Some(d) = usize_of(&record["dim"]) {
        check(&mut row.problems, "dim", d, alg.dim());
    }
    if let Some(c) = record["cartan"].as_array() {
        let c: Vec<Vec<usize>> = c
            .iter()
            .map(|r| r.as_array().into_iter().flatten().filter_map(usize_of).collect())
            .collect();
        check(&mut row.problems, "cartan", c, alg.cartan());
    }
    if let Some(z) = usize_of(&expected["center_dim"]) {
        check(&mut row.problems, "center", z, alg.center_dim());
    }
    let (hh, inter) = match alg.hh() {
        Ok(x) => x,
        Err(e) => {
            row.problems.push(format!("hh: {e}"));
            return row;
        }
    };
    let triple = [hh.h0, hh.h1, hh.h2];
    row.computed = Some(triple);
    if let Some(exp) = expected["hh"].as_array() {
        for (k, (e, c)) in exp.iter().zip(triple).enumerate() {
            if let Some(e) = usize_of(e) {
                check(&mut row.problems, &format!("HH^{k}"), e, c);
            }
        }
    }
    if let Some(exp) = expected["intermediates"].as_array() {
        let exp: Vec<usize> = exp.iter().filter_map(usize_of).collect();
        let got = vec![inter.hom_p0, inter.hom_p1, inter.ker_delta1, inter.hom_omega2];
        check(&mut row.problems, "intermediates", exp, got);
    }
    if entry.generators_apply(field.char_class()) {
        let texts: Vec<&str> = entry.generators.iter().map(|g| g.text).collect();
        match alg.check_generators(&texts) {
            Ok(r) if r.generates() => {}
            Ok(r) => row.problems.push(format!(
                "generators: outside kernel {:?}, closure {} of {}",
                r.outside_kernel, r.closure_dim, r.kernel_dim
            )),
            Err(e) => row.problems.push(format!("generators: {e}")),
        }
    }
    if oracle {
        match alg.oracle(DEFAULT_GUARD) {
            Ok(r) => {
                let disagree = r.hh.iter().zip(triple).any(|(o, c)| o.is_some_and(|o| o != c));
                if disagree {
                    row.oracle_disagrees = true;
                    row.problems.push(format!("oracle: {:?} against {:?}", r.hh, triple));
                }
            }
            Err(e) => row.problems.push(format!("oracle: {e}")),
        }
    }
    row
}

/// Runs the named entries (all when empty) over their designated fields.
pub fn run(names: &[String], table: &Value, oracle: bool) -> Result<Vec<Row>, Failure> {
    let entries: Vec<&'static CatalogEntry> = if names.is_empty() {
        catalog::ENTRIES.iter().collect()
    } else {
        names
            .iter()
            .map(|n| catalog::get(n).map_err(|e| Failure::Parse(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    let mut jobs = Vec::new();
    for e in entries {
        let record = &table[e.name];
        if record.is_null() {
            return Err(Failure::Parse(format!("no expectations for `{}`", e.name)));
        }
        let fields = match record["designated_fields"].as_array() {
            Some(fs) => fs
                .iter()
                .map(|f| {
                    let s = f.as_str().unwrap_or_default();
                    FieldSpec::parse(s).map_err(|err| Failure::Parse(format!("{}: {s}: {err}", e.name)))
                })
                .collect::<Result<Vec<_>, _>>()?,
            None => e.designated_fields(),
        };
        jobs.extend(fields.into_iter().map(|f| (e, f)));
    }
    Ok(jobs.into_par_iter().map(|(e, f)| run_one(e, table, f, oracle)).collect())
}
