//! Published reference tables shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use spherical_zeta::luo::luo_table;
use spherical_zeta::zeta::ZetaFactor;
use spherical_zeta::{Family, QPoly, Rational, RootSystem};

pub type LuoRow = (&'static [usize], usize);

pub const LUO_TABLES: &[(Family, usize, &[LuoRow])] = &[
    (
        Family::A,
        5,
        &[(&[1, 2, 1, 5, 4, 5, 1], 3), (&[1, 3, 2, 5, 3, 4, 1], 3), (&[1, 4, 3, 5, 2, 3, 1], 3), (&[2, 4, 2], 3)],
    ),
    (
        Family::C,
        5,
        &[
            (&[1, 2, 1], 4),
            (&[1, 3, 2, 3, 1], 4),
            (&[1, 4, 3, 4, 1], 4),
            (&[1, 5, 4, 5, 1], 4),
            (&[2, 4, 2], 4),
            (&[2, 5, 3, 5, 2], 4),
        ],
    ),
    (
        Family::D,
        5,
        &[(&[1, 2, 1], 4), (&[1, 3, 2, 3, 1], 4), (&[1, 4, 5, 1, 5, 4, 1], 3), (&[2, 4, 3, 4, 2, 5, 3, 5, 2], 4)],
    ),
    (Family::G, 2, &[(&[1, 2, 1], 6)]),
    (Family::F, 4, &[(&[1, 2, 1], 6), (&[1, 3, 2, 4, 2, 3, 1], 6), (&[1, 4, 1], 4), (&[3, 4, 3], 6)]),
    (
        Family::E,
        6,
        &[
            (&[1, 2, 6, 5, 6, 2, 1, 3, 1], 4),
            (&[1, 4, 3, 5, 4, 6, 4, 5, 3, 4, 1], 5),
            (&[1, 5, 2, 3, 6, 3, 2, 5, 1], 4),
            (&[1, 6, 1], 3),
            (&[2, 4, 2], 6),
        ],
    ),
    (
        Family::E,
        7,
        &[
            (&[1, 2, 7, 2, 1], 4),
            (&[1, 3, 1], 6),
            (&[1, 4, 3, 6, 3, 4, 1], 6),
            (&[1, 5, 2, 4, 2, 5, 1], 6),
            (&[1, 6, 1], 4),
            (&[1, 7, 6, 7, 1], 4),
            (&[2, 3, 7, 5, 6, 2], 5),
            (&[2, 6, 5, 7, 3, 2], 5),
            (&[3, 5, 4, 7, 4, 5, 3], 6),
            (&[4, 6, 4], 6),
        ],
    ),
    (
        Family::E,
        8,
        &[
            (&[1, 2, 8, 2, 1, 3, 1], 6),
            (&[1, 4, 3, 7, 5, 7, 3, 4, 1], 8),
            (&[1, 5, 2, 5, 1], 8),
            (&[1, 6, 1], 6),
            (&[1, 7, 6, 8, 6, 7, 1], 6),
            (&[1, 8, 1], 4),
            (&[2, 3, 8, 3, 2, 7, 2], 6),
            (&[2, 4, 2, 6, 5, 8, 5, 6, 2], 8),
            (&[3, 5, 4, 8, 4, 5, 3, 6, 3], 8),
            (&[4, 6, 4, 7, 4], 8),
            (&[7, 8, 7], 6),
        ],
    ),
];

/// Compute the Luo table and match it against `expected` up to order and
/// cyclic rotation of each cycle.
pub fn check_luo(family: Family, rank: usize, expected: &[LuoRow]) -> Result<(), String> {
    let rs = RootSystem::build(family, rank).map_err(|e| e.to_string())?;
    let got = luo_table(&rs).map_err(|e| e.to_string())?;
    if got.len() != expected.len() {
        return Err(format!("{family}{rank}: {} orbits, expected {}", got.len(), expected.len()));
    }
    for &(cycle, m) in expected {
        let hit = got
            .iter()
            .find(|r| r.orbit.same_cycle(cycle))
            .ok_or_else(|| format!("{family}{rank}: cycle {cycle:?} not found"))?;
        if hit.m != m {
            return Err(format!("{family}{rank}: {} has m = {}, expected {m}", hit.orbit, hit.m));
        }
    }
    Ok(())
}

pub fn q() -> QPoly {
    QPoly::q()
}

pub fn int(n: i64) -> QPoly {
    QPoly::constant(Rational::from_integer(BigInt::from(n)))
}

pub fn half() -> QPoly {
    QPoly::constant(Rational::new(BigInt::from(1), BigInt::from(2)))
}

/// `q^2 + a q + 1`
pub fn quad(a: i64) -> QPoly {
    &(&q().pow(2) + &(&int(a) * &q())) + &int(1)
}

pub struct PublishedLine {
    pub label: &'static str,
    /// `E/d`, the exponent of `q` in the eigenvalue.
    pub q_exp: i64,
    /// unity index → multiplicity
    pub splits: &'static [(u32, u64)],
    pub degree: fn() -> QPoly,
}

pub fn c2_table() -> Vec<PublishedLine> {
    vec![
        PublishedLine { label: "((),(1,1))", q_exp: 0, splits: &[(0, 1)], degree: || q().pow(4) },
        PublishedLine { label: "((),(2))", q_exp: 1, splits: &[(2, 1)], degree: || &(&half() * &q()) * &quad(0) },
        PublishedLine {
            label: "((1),(1))",
            q_exp: 1,
            splits: &[(1, 1), (3, 1)],
            degree: || &(&half() * &q()) * &(&q() + &int(1)).pow(2),
        },
        PublishedLine { label: "((1,1),())", q_exp: 1, splits: &[(2, 1)], degree: || &(&half() * &q()) * &quad(0) },
        PublishedLine { label: "((2),())", q_exp: 2, splits: &[(0, 1)], degree: || int(1) },
    ]
}

/// The `c = 4` orbit through `(1, 3)`.
pub fn c3_table() -> Vec<PublishedLine> {
    vec![
        PublishedLine {
            label: "((),(2,1))",
            q_exp: 2,
            splits: &[(1, 1)],
            degree: || &(&(&half() * &(&q() + &int(1)).pow(2)) * &q().pow(4)) * &quad(-1),
        },
        PublishedLine {
            label: "((),(3))",
            q_exp: 5,
            splits: &[(1, 1)],
            degree: || &(&(&half() * &q()) * &quad(-1)) * &quad(0),
        },
        PublishedLine {
            label: "((1),(1,1))",
            q_exp: 2,
            splits: &[(0, 1)],
            degree: || &(&(&half() * &q().pow(4)) * &quad(0)) * &quad(1),
        },
        PublishedLine {
            label: "((1),(2))",
            q_exp: 4,
            splits: &[(0, 2)],
            degree: || &(&q().pow(2) * &quad(-1)) * &quad(1),
        },
        PublishedLine {
            label: "((1,1),(1))",
            q_exp: 3,
            splits: &[(1, 1)],
            degree: || &(&q().pow(3) * &quad(-1)) * &quad(1),
        },
        PublishedLine {
            label: "((2),(1))",
            q_exp: 5,
            splits: &[(1, 2)],
            degree: || &(&(&half() * &q()) * &quad(0)) * &quad(1),
        },
        PublishedLine {
            label: "((2,1),())",
            q_exp: 5,
            splits: &[(0, 1)],
            degree: || &(&(&half() * &q()) * &(&q() + &int(1)).pow(2)) * &quad(-1),
        },
        PublishedLine { label: "((3),())", q_exp: 8, splits: &[(0, 1)], degree: || int(1) },
    ]
}

/// Line-by-line comparison of a computed factor with a published table.
pub fn check_factor(factor: &ZetaFactor, table: &[PublishedLine]) -> Result<(), String> {
    if factor.lines.len() != table.len() {
        return Err(format!("{} lines, expected {}", factor.lines.len(), table.len()));
    }
    for (line, want) in factor.lines.iter().zip(table) {
        let label = line.label.to_string();
        if label != want.label {
            return Err(format!("label {label}, expected {}", want.label));
        }
        let ev = &line.eigenvalue_base;
        if ev.q_exp_num() != want.q_exp * ev.root_order() as i64 {
            return Err(format!("{label}: q exponent {}/{}", ev.q_exp_num(), ev.root_order()));
        }
        let splits: BTreeMap<u32, u64> = want.splits.iter().copied().collect();
        if line.splits != splits {
            return Err(format!("{label}: splits {:?}, expected {splits:?}", line.splits));
        }
        if line.degree != (want.degree)() {
            return Err(format!("{label}: degree {}, expected {}", line.degree, (want.degree)()));
        }
    }
    Ok(())
}
