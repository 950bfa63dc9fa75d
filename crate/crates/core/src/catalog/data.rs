use super::{CatalogEntry, Expectation, Generator};
use crate::fields::CharClass::{self, Other, Three, Two};

const fn ex(class: CharClass, h: (usize, usize, usize), inter: Option<[usize; 4]>) -> Expectation {
    Expectation {
        class,
        hh: [Some(h.0), Some(h.1), Some(h.2)],
        intermediates: inter,
        center_dim: Some(h.0),
    }
}

const ALL_FIELDS: &[&str] = &["Q", "GF(2)", "GF(3)", "GF(5)"];
const ALL_CLASSES: &[CharClass] = &[Two, Three, Other];

const LAMBDA1P: &str = "\
algebra lambda1p
vertices: 1, 2
arrow alpha: 2 -> 2
arrow beta: 1 -> 2
arrow gamma: 2 -> 1
relations:
  beta*alpha*gamma = 0
  alpha^2 = gamma*beta
";

const LAMBDA1: &str = "\
algebra lambda1
vertices: 1, 2
arrow alpha: 2 -> 2
arrow beta: 1 -> 2
arrow gamma: 2 -> 1
relations:
  beta*alpha*gamma = beta*alpha^2*gamma
  alpha^2 = gamma*beta
  alpha^5 = 0
resolution-relations:
  beta*alpha*gamma = beta*alpha^2*gamma
  alpha^2 = gamma*beta
";

const LAMBDA2P: &str = "\
algebra lambda2p
vertices: 1, 2
arrow alpha: 2 -> 2
arrow beta: 1 -> 2
arrow gamma: 2 -> 1
relations:
  alpha^2*gamma = 0
  beta*alpha^2 = 0
  beta*gamma = 0
  alpha^3 = gamma*beta
";

const LAMBDA2: &str = "\
algebra lambda2
vertices: 1, 2
arrow alpha: 2 -> 2
arrow beta: 1 -> 2
arrow gamma: 2 -> 1
relations:
  alpha^2*gamma = 0
  beta*alpha^2 = 0
  beta*gamma = beta*alpha*gamma
  alpha^3 = gamma*beta
";

const LAMBDA3P: &str = "\
algebra lambda3p params lambda
field-constraints: lambda not-in {0, 1}
vertices: 1, 2
arrow alpha: 1 -> 1
arrow sigma: 1 -> 2
arrow gamma: 2 -> 1
arrow beta: 2 -> 2
relations:
  alpha^2 = sigma*gamma
  alpha*sigma = sigma*beta
  gamma*alpha = beta*gamma
  lambda*beta^2 = gamma*sigma
";

const LAMBDA3: &str = "\
algebra lambda3 params lambda
field-constraints: lambda not-in {0, 1}
vertices: 1, 2
arrow alpha: 1 -> 1
arrow sigma: 1 -> 2
arrow gamma: 2 -> 1
arrow beta: 2 -> 2
relations:
  alpha^2 = sigma*gamma + alpha^3
  alpha*sigma = sigma*beta
  gamma*alpha = beta*gamma
  lambda*beta^2 = gamma*sigma
  alpha^4 = 0
resolution-relations:
  alpha^2 = sigma*gamma + alpha^3
  alpha*sigma = sigma*beta
  gamma*alpha = beta*gamma
  lambda*beta^2 = gamma*sigma
";

const LAMBDA4P: &str = "\
algebra lambda4p
vertices: 1, 2, 3
arrow alpha: 1 -> 3
arrow gamma: 3 -> 2
arrow delta: 1 -> 2
arrow beta: 2 -> 1
relations:
  delta*beta*delta = alpha*gamma
  beta*delta*beta*delta*beta*delta*beta = 0
  gamma*beta*alpha = 0
";

const LAMBDA4: &str = "\
algebra lambda4
vertices: 1, 2, 3
arrow alpha: 1 -> 3
arrow gamma: 3 -> 2
arrow delta: 1 -> 2
arrow beta: 2 -> 1
relations:
  delta*beta*delta = alpha*gamma
  beta*delta*beta*delta*beta*delta*beta = 0
  gamma*beta*alpha = gamma*beta*delta*beta*alpha
";

const LAMBDA5P: &str = "\
algebra lambda5p
vertices: 1, 2, 3
arrow beta: 1 -> 2
arrow alpha: 2 -> 2
arrow gamma: 2 -> 1
arrow delta: 2 -> 3
arrow sigma: 3 -> 2
relations:
  alpha^2 = gamma*beta
  alpha^3 = delta*sigma
  beta*delta = 0
  sigma*gamma = 0
  alpha*delta = 0
  sigma*alpha = 0
  beta*gamma = 0
";

const LAMBDA5: &str = "\
algebra lambda5
vertices: 1, 2, 3
arrow beta: 1 -> 2
arrow alpha: 2 -> 2
arrow gamma: 2 -> 1
arrow delta: 2 -> 3
arrow sigma: 3 -> 2
relations:
  alpha^2 = gamma*beta
  alpha^3 = delta*sigma
  beta*delta = 0
  sigma*gamma = 0
  alpha*delta = 0
  sigma*alpha = 0
  beta*gamma = beta*alpha*gamma
";

const LAMBDA6P: &str = "\
algebra lambda6p
vertices: 1, 2, 3
arrow alpha: 1 -> 2
arrow beta: 2 -> 1
arrow delta: 2 -> 3
arrow gamma: 3 -> 2
relations:
  alpha*beta = 0
  alpha*delta*gamma*delta = 0
  gamma*delta*gamma*beta = 0
  beta*alpha = delta*gamma*delta*gamma
";

const LAMBDA6: &str = "\
algebra lambda6
vertices: 1, 2, 3
arrow alpha: 1 -> 2
arrow beta: 2 -> 1
arrow delta: 2 -> 3
arrow gamma: 3 -> 2
relations:
  alpha*beta = alpha*delta*gamma*beta
  alpha*delta*gamma*delta = 0
  gamma*delta*gamma*beta = 0
  beta*alpha = delta*gamma*delta*gamma
";

const LAMBDA7P: &str = "\
algebra lambda7p
vertices: 1, 2, 3
arrow alpha: 1 -> 1
arrow sigma: 1 -> 3
arrow gamma: 3 -> 2
arrow delta: 1 -> 2
arrow beta: 2 -> 1
relations:
  beta*delta = 0
  alpha*sigma = 0
  alpha*delta = sigma*gamma
  gamma*beta*alpha = 0
  alpha^2 = delta*beta
";

const LAMBDA7: &str = "\
algebra lambda7
vertices: 1, 2, 3
arrow alpha: 1 -> 1
arrow sigma: 1 -> 3
arrow gamma: 3 -> 2
arrow delta: 1 -> 2
arrow beta: 2 -> 1
relations:
  beta*delta = beta*alpha*delta
  alpha*sigma = 0
  alpha*delta = sigma*gamma
  gamma*beta*alpha = 0
  alpha^2 = delta*beta
";

const LAMBDA8P: &str = "\
algebra lambda8p
vertices: 1, 2, 3
arrow alpha: 1 -> 1
arrow sigma: 3 -> 1
arrow gamma: 2 -> 3
arrow delta: 2 -> 1
arrow beta: 1 -> 2
relations:
  delta*beta = 0
  sigma*alpha = 0
  delta*alpha = gamma*sigma
  alpha*beta*gamma = 0
  alpha^2 = beta*delta
";

const LAMBDA8: &str = "\
algebra lambda8
vertices: 1, 2, 3
arrow alpha: 1 -> 1
arrow sigma: 3 -> 1
arrow gamma: 2 -> 3
arrow delta: 2 -> 1
arrow beta: 1 -> 2
relations:
  delta*beta = delta*alpha*beta
  sigma*alpha = 0
  delta*alpha = gamma*sigma
  alpha*beta*gamma = 0
  alpha^2 = beta*delta
";

const LAMBDA9P: &str = "\
algebra lambda9p
vertices: 1, 2, 3, 4
arrow alpha: 1 -> 4
arrow beta: 4 -> 1
arrow xi: 2 -> 4
arrow eps: 4 -> 2
arrow gamma: 3 -> 4
arrow delta: 4 -> 3
relations:
  alpha*beta = 0
  xi*eps = 0
  gamma*delta = 0
  beta*alpha + eps*xi + delta*gamma = 0
";

const LAMBDA9: &str = "\
algebra lambda9
vertices: 1, 2, 3, 4
arrow alpha: 1 -> 4
arrow beta: 4 -> 1
arrow xi: 2 -> 4
arrow eps: 4 -> 2
arrow gamma: 3 -> 4
arrow delta: 4 -> 3
relations:
  alpha*beta = alpha*delta*gamma*beta
  xi*eps = 0
  gamma*delta = 0
  beta*alpha + eps*xi + delta*gamma = 0
";

const LAMBDA10P: &str = "\
algebra lambda10p
vertices: 1, 2, 3, 4, 5
arrow gamma: 1 -> 2
arrow sigma: 1 -> 3
arrow xi: 2 -> 1
arrow eta: 2 -> 5
arrow delta: 3 -> 1
arrow beta: 3 -> 4
arrow alpha: 4 -> 2
arrow mu: 5 -> 3
relations:
  sigma*delta = gamma*xi
  eta*mu = xi*sigma
  beta*alpha = delta*gamma
  alpha*eta = 0
  mu*beta = 0
";

const LAMBDA10: &str = "\
algebra lambda10
vertices: 1, 2, 3, 4, 5
arrow gamma: 1 -> 2
arrow sigma: 1 -> 3
arrow xi: 2 -> 1
arrow eta: 2 -> 5
arrow delta: 3 -> 1
arrow beta: 3 -> 4
arrow alpha: 4 -> 2
arrow mu: 5 -> 3
relations:
  sigma*delta = gamma*xi + sigma*delta*sigma*delta
  eta*mu = xi*sigma
  beta*alpha = delta*gamma
  alpha*eta = 0
  mu*beta = 0
  delta*sigma*delta*sigma = 0
resolution-relations:
  sigma*delta = gamma*xi + sigma*delta*sigma*delta
  eta*mu = xi*sigma
  beta*alpha = delta*gamma
  alpha*eta = 0
  mu*beta = 0
";

const P_A5: &str = "\
algebra p_a5
vertices: 1, 2, 3, 4, 5
arrow alpha: 4 -> 2
arrow beta: 2 -> 4
arrow delta: 2 -> 1
arrow gamma: 1 -> 2
arrow sigma: 1 -> 3
arrow xi: 3 -> 1
arrow eta: 3 -> 5
arrow mu: 5 -> 3
relations:
  alpha*beta = 0
  beta*alpha = delta*gamma
  gamma*delta = sigma*xi
  xi*sigma = eta*mu
  mu*eta = 0
";

const MESH_G2: &str = "\
algebra mesh_g2
vertices: 1, 2, 3, 4
arrow alpha: 1 -> 4
arrow beta: 4 -> 1
arrow xi: 2 -> 4
arrow eps: 4 -> 2
arrow gamma: 3 -> 4
arrow delta: 4 -> 3
relations:
  beta*alpha + eps*xi + delta*gamma = 0
  alpha*delta = 0
  xi*beta = 0
  gamma*eps = 0
";

const GAMMA_3: &[Generator] = &[
    Generator {
        name: "Gamma1",
        text: "sigma | e1 - e1 | gamma - alpha | e1 + e1 | alpha",
    },
    Generator {
        name: "Gamma2",
        text: "gamma | e2 - e2 | sigma + beta | e2 - e2 | beta",
    },
];

const PSI_1P: &[Generator] = &[
    Generator {
        name: "Psi1'",
        text: "-e1 | beta*gamma + beta*gamma | e1 + beta | alpha*gamma - beta*alpha | gamma",
    },
    Generator {
        name: "Psi2'",
        text: "e2 | alpha^4 - alpha | alpha^3 + alpha^3 | alpha - alpha^4 | e2 + gamma | beta*alpha - alpha*gamma | beta",
    },
];

const PSI_1: &[Generator] = &[
    Generator {
        name: "Psi1",
        text: "-e1 | beta*gamma + beta*gamma | e1 + beta | alpha*gamma - beta*alpha | gamma \
               + beta*alpha^2 | gamma - beta | alpha^2*gamma",
    },
    Generator {
        name: "Psi2",
        text: "e2 | alpha^4 - alpha | alpha^3 + alpha^3 | alpha - alpha^4 | e2 + gamma | beta*alpha - alpha*gamma | beta \
               - alpha^4 | alpha + alpha | alpha^4",
    },
];

const GAMMA_6P: &[Generator] = &[
    Generator {
        name: "Gamma12",
        text: "alpha | e2 - e1 | alpha + e1 | gamma",
    },
    Generator {
        name: "Gamma21",
        text: "beta | e1 - e2 | beta - delta | e1",
    },
    Generator {
        name: "Gamma33",
        text: "gamma*beta | e3 - e3 | alpha*delta - gamma | delta*gamma*delta + gamma*delta*gamma | delta",
    },
];

const DELTA_6: &[Generator] = &[
    Generator {
        name: "Delta12",
        text: "alpha | e2 + e1 | alpha + e1 | gamma + alpha*delta*gamma | e2 + e1 | gamma*delta*gamma",
    },
    Generator {
        name: "Delta21",
        text: "beta | e1 + e2 | beta + delta | e1 + e2 | delta*gamma*beta + delta*gamma*delta | e1",
    },
    Generator {
        name: "Delta33",
        text: "gamma*beta | e3 + e3 | alpha*delta + gamma | delta*gamma*delta + gamma*delta*gamma | delta",
    },
];

const ZETA_9P: &[Generator] = &[
    Generator {
        name: "zeta1",
        text: "e1 | alpha*delta*gamma*beta - alpha | delta*gamma*beta + alpha*delta | gamma*beta \
               - alpha*eps | xi*beta - alpha*delta*gamma | beta + alpha*delta*gamma*beta | e1",
    },
    Generator {
        name: "zeta2",
        text: "e2 | xi*beta*alpha*eps - xi | beta*alpha*eps + xi*beta | alpha*eps \
               - xi*delta | gamma*eps - xi*beta*alpha | eps + xi*beta*alpha*eps | e2",
    },
    Generator {
        name: "zeta3",
        text: "e3 | gamma*beta*alpha*delta - gamma | beta*alpha*delta + gamma*beta | alpha*delta \
               - gamma*eps | xi*delta - gamma*beta*alpha | delta + gamma*beta*alpha*delta | e3",
    },
    Generator {
        name: "zeta4",
        text: "e4 | beta*alpha*delta*gamma - beta | alpha*delta*gamma - eps | xi*beta*alpha \
               + delta | gamma*beta*alpha + beta*alpha | delta*gamma - delta*gamma | beta*alpha \
               - beta*alpha*delta | gamma - delta*gamma*eps | xi + delta*gamma*beta | alpha \
               + beta*alpha*delta*gamma | e4",
    },
];

const PSI_9: &[Generator] = &[
    Generator {
        name: "Psi1",
        text: "e1 | alpha*delta*gamma*beta + alpha | delta*gamma*beta + alpha*delta | gamma*beta \
               + alpha*eps | xi*beta + alpha*delta*gamma | beta + alpha*delta*gamma | delta*gamma*beta \
               + alpha*delta*gamma*beta | e1 + alpha*delta*gamma | delta*gamma*beta",
    },
    Generator {
        name: "Psi2",
        text: "e2 | xi*beta*alpha*eps + xi | beta*alpha*eps + xi*beta | alpha*eps \
               + xi*delta | gamma*eps + xi*beta*alpha | eps + xi*beta*alpha*eps | e2",
    },
    Generator {
        name: "Psi3",
        text: "e3 | gamma*beta*alpha*delta + gamma | beta*alpha*delta + gamma*beta | alpha*delta \
               + gamma*eps | xi*delta + gamma*eps*xi | delta + gamma*beta*alpha*delta | e3 \
               + gamma*beta*alpha | beta*alpha*delta",
    },
    Generator {
        name: "Psi4",
        text: "e4 | beta*alpha*delta*gamma + beta | alpha*delta*gamma + eps | xi*beta*alpha \
               + delta | gamma*beta*alpha + beta*alpha | delta*gamma + delta*gamma | beta*alpha \
               + beta*alpha*delta | gamma + delta*gamma*eps | xi + delta*gamma*beta | alpha \
               + beta*alpha*delta*gamma | e4 + delta*gamma*beta | alpha*delta*gamma \
               + beta*alpha*delta | gamma*beta*alpha",
    },
];

const ZETA_10P: &[Generator] = &[
    Generator {
        name: "zeta1",
        text: "e1 | sigma*delta*sigma*delta - sigma*delta | gamma*xi + sigma*delta*sigma*delta | e1 \
               - gamma | delta*sigma*delta + gamma*xi*gamma | delta + sigma | xi*gamma*xi \
               - sigma*delta*sigma | xi + gamma*eta | alpha*xi - sigma*beta | mu*delta",
    },
    Generator {
        name: "zeta2",
        text: "e2 | beta*alpha*xi*gamma - xi*gamma | beta*alpha + eta*mu | xi*gamma \
               - eta*mu*delta*sigma | e2 - eta | alpha*xi*gamma + xi*gamma*eta | alpha \
               + xi | gamma*xi*gamma - xi*gamma*xi | gamma",
    },
    Generator {
        name: "zeta3",
        text: "e3 | xi*gamma*eta*mu - delta*sigma | eta*mu - beta | mu*delta*sigma \
               + delta*sigma*beta | mu - delta | sigma*delta*sigma + delta*sigma*delta | sigma \
               + beta*alpha | delta*sigma - delta*sigma*beta*alpha | e3",
    },
    Generator {
        name: "zeta4",
        text: "e4 | mu*delta*sigma*beta - alpha | delta*sigma*beta - alpha*xi | sigma*beta \
               + alpha*xi*gamma | beta - alpha*xi*gamma*eta | e4",
    },
    Generator {
        name: "zeta5",
        text: "e5 | alpha*xi*gamma*eta - mu | xi*gamma*eta + mu*delta | gamma*eta \
               + mu*delta*sigma | eta - mu*delta*sigma*beta | e5",
    },
];

const PSI_10: &[Generator] = &[
    Generator {
        name: "Psi1",
        text: "e1 | sigma*delta*sigma*delta + sigma*delta | gamma*xi + sigma*delta | sigma*delta*sigma*delta \
               + sigma*delta*sigma*delta | e1 + gamma | delta*sigma*delta + gamma*xi*gamma | delta \
               + sigma | xi*gamma*xi + sigma*delta*sigma | xi + gamma*eta | alpha*xi \
               + sigma*beta | mu*delta + sigma*delta*sigma*delta | sigma*delta + sigma*delta*sigma | xi*gamma*xi",
    },
    Generator {
        name: "Psi2",
        text: "e2 | beta*alpha*xi*gamma + xi*gamma | beta*alpha + eta*mu | xi*gamma \
               + eta*mu*delta*sigma | e2 + eta | alpha*xi*gamma + xi*gamma*eta | alpha \
               + xi | gamma*xi*gamma + xi*gamma*xi | gamma + xi*gamma*xi | gamma*xi*gamma \
               + xi*gamma*xi | gamma*xi*gamma",
    },
    Generator {
        name: "Psi3",
        text: "e3 | xi*gamma*eta*mu + delta*sigma | eta*mu + beta | mu*delta*sigma \
               + delta*sigma*beta | mu + delta | sigma*delta*sigma + delta*sigma*delta | sigma \
               + beta*alpha | delta*sigma + delta*sigma*beta*alpha | e3",
    },
    Generator {
        name: "Psi4",
        text: "e4 | mu*delta*sigma*beta + alpha | delta*sigma*beta + alpha*xi | sigma*beta \
               + alpha*xi*gamma | beta + alpha*xi*gamma*eta | e4",
    },
    Generator {
        name: "Psi5",
        text: "e5 | alpha*xi*gamma*eta + mu | xi*gamma*eta + mu*delta | gamma*eta \
               + mu*delta*sigma | eta + mu*delta*sigma*beta | e5",
    },
];

const NO_GENERATORS: &[Generator] = &[];

const L3P_EXP: &[Expectation] = &[
    ex(Two, (6, 6, 6), Some([8, 12, 8, 10])),
    ex(Three, (6, 4, 4), Some([8, 12, 6, 10])),
    ex(Other, (6, 4, 4), Some([8, 12, 6, 10])),
];
const L3_EXP: &[Expectation] = &[ex(Two, (6, 4, 4), Some([8, 12, 6, 10]))];
const L1P_EXP: &[Expectation] = &[
    ex(Two, (5, 3, 3), Some([8, 11, 6, 8])),
    ex(Three, (5, 4, 4), Some([8, 11, 7, 8])),
    ex(Other, (5, 3, 3), Some([8, 11, 6, 8])),
];
const L2P_EXP: &[Expectation] = &[ex(Two, (5, 3, 3), None), ex(Three, (5, 4, 4), None), ex(Other, (5, 3, 3), None)];
const L1_EXP: &[Expectation] = &[ex(Three, (5, 3, 3), Some([8, 11, 6, 8]))];
const L2_EXP: &[Expectation] = &[ex(Three, (5, 3, 3), None)];
const L47P_EXP: &[Expectation] = &[ex(Two, (5, 3, 3), None), ex(Three, (5, 2, 2), None), ex(Other, (5, 2, 2), None)];
const L6P_EXP: &[Expectation] = &[
    ex(Two, (5, 3, 3), Some([10, 10, 8, 5])),
    ex(Three, (5, 2, 2), Some([10, 10, 7, 5])),
    ex(Other, (5, 2, 2), Some([10, 10, 7, 5])),
];
const L48_EXP: &[Expectation] = &[ex(Two, (5, 2, 2), None)];
const L6_EXP: &[Expectation] = &[ex(Two, (5, 2, 2), Some([10, 10, 7, 5]))];
const L9P_EXP: &[Expectation] = &[
    ex(Two, (5, 2, 3), Some([10, 12, 7, 8])),
    ex(Three, (5, 1, 0), Some([10, 12, 6, 6])),
    ex(Other, (5, 1, 0), Some([10, 12, 6, 6])),
];
const L9_EXP: &[Expectation] = &[ex(Two, (5, 1, 2), Some([10, 12, 6, 8]))];
const L10P_EXP: &[Expectation] = &[
    ex(Two, (2, 1, 1), Some([10, 16, 9, 8])),
    ex(Three, (2, 0, 0), Some([10, 16, 8, 8])),
    ex(Other, (2, 0, 0), Some([10, 16, 8, 8])),
];
const L10_EXP: &[Expectation] = &[ex(Two, (2, 0, 0), Some([10, 16, 8, 8]))];
const PA5_EXP: &[Expectation] = &[Expectation {
    class: Two,
    hh: [None, Some(2), Some(2)],
    intermediates: None,
    center_dim: None,
}];
const MESH_EXP: &[Expectation] = &[Expectation {
    class: Two,
    hh: [None, None, None],
    intermediates: None,
    center_dim: Some(2),
}];

const CARTAN_3: &[&[usize]] = &[&[4, 2], &[2, 4]];
const CARTAN_1: &[&[usize]] = &[&[3, 3], &[3, 5]];
const CARTAN_6: &[&[usize]] = &[&[2, 2, 1], &[2, 4, 3], &[1, 3, 4]];
const CARTAN_10: &[&[usize]] = &[&[3, 2, 2, 1, 1], &[2, 2, 2, 0, 2], &[2, 2, 2, 2, 0], &[1, 2, 0, 1, 1], &[1, 0, 2, 1, 1]];
const CARTAN_9: &[&[usize]] = &[&[2, 1, 1, 2], &[1, 2, 1, 2], &[1, 1, 2, 2], &[2, 2, 2, 4]];

const fn standard(
    name: &'static str,
    partner: &'static str,
    source: &'static str,
    designated: &'static [&'static str],
    dim: Option<usize>,
    cartan: Option<&'static [&'static [usize]]>,
    expectations: &'static [Expectation],
    generators: &'static [Generator],
) -> CatalogEntry {
    CatalogEntry {
        name,
        partner: Some(partner),
        standard: true,
        source,
        designated,
        dim,
        cartan,
        expectations,
        generators,
        generator_classes: ALL_CLASSES,
    }
}

const fn nonstandard(
    name: &'static str,
    partner: &'static str,
    source: &'static str,
    designated: &'static [&'static str],
    dim: Option<usize>,
    cartan: Option<&'static [&'static [usize]]>,
    expectations: &'static [Expectation],
    generators: &'static [Generator],
    generator_classes: &'static [CharClass],
) -> CatalogEntry {
    CatalogEntry {
        name,
        partner: Some(partner),
        standard: false,
        source,
        designated,
        dim,
        cartan,
        expectations,
        generators,
        generator_classes,
    }
}

pub static ENTRIES: &[CatalogEntry] = &[
    standard("lambda1p", "lambda1", LAMBDA1P, ALL_FIELDS, Some(14), Some(CARTAN_1), L1P_EXP, PSI_1P),
    standard("lambda2p", "lambda2", LAMBDA2P, ALL_FIELDS, None, None, L2P_EXP, NO_GENERATORS),
    standard("lambda3p", "lambda3", LAMBDA3P, &["Q", "GF(4)", "GF(3)", "GF(5)"], Some(12), Some(CARTAN_3), L3P_EXP, GAMMA_3),
    standard("lambda4p", "lambda4", LAMBDA4P, ALL_FIELDS, None, None, L47P_EXP, NO_GENERATORS),
    standard("lambda5p", "lambda5", LAMBDA5P, ALL_FIELDS, None, None, L47P_EXP, NO_GENERATORS),
    standard("lambda6p", "lambda6", LAMBDA6P, ALL_FIELDS, Some(22), Some(CARTAN_6), L6P_EXP, GAMMA_6P),
    standard("lambda7p", "lambda7", LAMBDA7P, ALL_FIELDS, None, None, L47P_EXP, NO_GENERATORS),
    standard("lambda8p", "lambda8", LAMBDA8P, ALL_FIELDS, None, None, L47P_EXP, NO_GENERATORS),
    standard("lambda9p", "lambda9", LAMBDA9P, ALL_FIELDS, Some(28), Some(CARTAN_9), L9P_EXP, ZETA_9P),
    standard("lambda10p", "lambda10", LAMBDA10P, ALL_FIELDS, Some(35), Some(CARTAN_10), L10P_EXP, ZETA_10P),
    nonstandard("lambda1", "lambda1p", LAMBDA1, &["GF(3)"], Some(14), None, L1_EXP, PSI_1, &[Three]),
    nonstandard("lambda2", "lambda2p", LAMBDA2, &["GF(3)"], None, None, L2_EXP, NO_GENERATORS, &[]),
    nonstandard("lambda3", "lambda3p", LAMBDA3, &["GF(4)"], Some(12), Some(CARTAN_3), L3_EXP, GAMMA_3, &[Two]),
    nonstandard("lambda4", "lambda4p", LAMBDA4, &["GF(2)"], None, None, L48_EXP, NO_GENERATORS, &[]),
    nonstandard("lambda5", "lambda5p", LAMBDA5, &["GF(2)"], None, None, L48_EXP, NO_GENERATORS, &[]),
    nonstandard("lambda6", "lambda6p", LAMBDA6, &["GF(2)"], Some(22), Some(CARTAN_6), L6_EXP, DELTA_6, &[Two]),
    nonstandard("lambda7", "lambda7p", LAMBDA7, &["GF(2)"], None, None, L48_EXP, NO_GENERATORS, &[]),
    nonstandard("lambda8", "lambda8p", LAMBDA8, &["GF(2)"], None, None, L48_EXP, NO_GENERATORS, &[]),
    nonstandard("lambda9", "lambda9p", LAMBDA9, &["GF(2)"], Some(28), Some(CARTAN_9), L9_EXP, PSI_9, &[Two]),
    nonstandard("lambda10", "lambda10p", LAMBDA10, &["GF(2)"], Some(35), Some(CARTAN_10), L10_EXP, PSI_10, &[Two]),
    CatalogEntry {
        name: "p_a5",
        partner: None,
        standard: true,
        source: P_A5,
        designated: &["GF(2)"],
        dim: Some(35),
        cartan: None,
        expectations: PA5_EXP,
        generators: NO_GENERATORS,
        generator_classes: &[],
    },
    CatalogEntry {
        name: "mesh_g2",
        partner: None,
        standard: true,
        source: MESH_G2,
        designated: &["GF(2)"],
        dim: None,
        cartan: None,
        expectations: MESH_EXP,
        generators: NO_GENERATORS,
        generator_classes: &[],
    },
];
