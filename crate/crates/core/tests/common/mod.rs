#![allow(dead_code)]

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use snm::corpus::{Corpus, SeedList};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn corpus() -> Corpus {
    Corpus::parse(BufReader::new(File::open(fixture("corpus.jsonl")).unwrap())).unwrap()
}

pub fn seeds() -> SeedList {
    SeedList::parse(BufReader::new(File::open(fixture("seeds.tsv")).unwrap())).unwrap()
}

/// Four-factor timeline: (year, seeds, papers, vertices, edges).
pub const AGGREGATE_TIMELINE: [(i32, i64, i64, i64, i64); 26] = [
    (1990, 1, 1, 2, 1),
    (1991, 1, 1, 2, 1),
    (1992, 1, 1, 2, 1),
    (1993, 1, 1, 2, 1),
    (1994, 1, 1, 2, 1),
    (1995, 2, 2, 4, 2),
    (1996, 2, 3, 6, 5),
    (1997, 3, 4, 9, 8),
    (1998, 3, 5, 9, 8),
    (1999, 4, 8, 12, 11),
    (2000, 5, 12, 18, 25),
    (2001, 8, 15, 27, 37),
    (2002, 9, 20, 33, 48),
    (2003, 11, 29, 53, 109),
    (2004, 12, 35, 59, 123),
    (2005, 19, 50, 86, 221),
    (2006, 20, 63, 99, 245),
    (2007, 23, 84, 123, 310),
    (2008, 25, 107, 139, 353),
    (2009, 28, 171, 204, 606),
    (2010, 30, 223, 251, 734),
    (2011, 35, 346, 381, 1107),
    (2012, 37, 396, 425, 1249),
    (2013, 37, 446, 489, 1440),
    (2014, 37, 509, 536, 1588),
    (2015, 37, 554, 582, 1714),
];

pub fn aggregate_column(i: usize) -> Vec<i64> {
    AGGREGATE_TIMELINE
        .iter()
        .map(|r| [r.1, r.2, r.3, r.4][i])
        .collect()
}

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input")
}

/// Solves (X'X) b = X'y exactly, X = [1 | regressors]. `None` if singular.
pub fn normal_equations_oracle(regressors: &[Vec<f64>], y: &[f64]) -> Option<Vec<f64>> {
    let n = y.len();
    let p = regressors.len() + 1;
    let col = |j: usize, i: usize| -> BigRational {
        if j == 0 {
            BigRational::from_integer(BigInt::from(1))
        } else {
            rational(regressors[j - 1][i])
        }
    };
    let xs: Vec<Vec<BigRational>> = (0..p).map(|j| (0..n).map(|i| col(j, i)).collect()).collect();
    let ys: Vec<BigRational> = y.iter().map(|&v| rational(v)).collect();

    // augmented p x (p + 1) system
    let mut m: Vec<Vec<BigRational>> = (0..p)
        .map(|a| {
            let mut row: Vec<BigRational> = (0..p)
                .map(|b| (0..n).fold(BigRational::zero(), |acc, i| acc + &xs[a][i] * &xs[b][i]))
                .collect();
            row.push((0..n).fold(BigRational::zero(), |acc, i| acc + &xs[a][i] * &ys[i]));
            row
        })
        .collect();

    for c in 0..p {
        let pivot = (c..p).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, pivot);
        let inv = BigRational::from_integer(BigInt::from(1)) / &m[c][c];
        for v in m[c].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..p {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in c..=p {
                    let sub = &f * &m[c][k];
                    m[r][k] = &m[r][k] - sub;
                }
            }
        }
    }
    Some(m.iter().map(|row| row[p].to_f64().expect("representable")).collect())
}

/// max |a - b| / max(|b|, floor) over paired entries.
pub fn max_rel_err(a: &[f64], b: &[f64], floor: f64) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs() / y.abs().max(floor))
        .fold(0.0, f64::max)
}
