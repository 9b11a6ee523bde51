//! Example families: tournaments, snakes, and skew tableaux.

use serde::{Deserialize, Serialize};

use crate::dynkin::{DynkinA, Node};
use crate::error::{Error, Result};
use crate::lweight::{DrinfeldPoly, KrFactor};
use crate::redsets::rset;

/// `∏_{i=1}^{N} ω_{i+N-2, q^{3(i-1)}}`, whose graph is a tournament on `N` vertices.
pub fn tournament_family(count: u32, rank: &DynkinA) -> Result<DrinfeldPoly> {
    if count < 2 {
        return Err(Error::PreconditionViolated("a tournament needs at least 2 vertices".into()));
    }
    let needed = 3 * count - 4;
    if rank.rank() < needed {
        return Err(Error::RankTooSmall { rank: rank.rank(), needed });
    }
    let factors = (1..=count).map(|i| KrFactor::new(i + count - 2, 3 * (i64::from(i) - 1), 1));
    DrinfeldPoly::from_factors(*rank, factors)
}

/// A sequence of points `(i_j, m_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Snake {
    rank: DynkinA,
    points: Vec<(Node, i64)>,
}

impl Snake {
    pub fn new(rank: DynkinA, points: Vec<(Node, i64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::PreconditionViolated("a snake needs at least one point".into()));
        }
        for &(i, _) in &points {
            rank.check(i)?;
        }
        Ok(Snake { rank, points })
    }

    pub fn rank(&self) -> DynkinA {
        self.rank
    }

    pub fn points(&self) -> &[(Node, i64)] {
        &self.points
    }

    /// `p_j` with `m_{j+1} - m_j = 2 + d(i_j, i_{j+1}) - 2 p_j`, if integral.
    fn steps(&self) -> impl Iterator<Item = Option<i64>> + '_ {
        self.points.windows(2).map(|w| {
            let twice = 2 + i64::from(w[0].0.abs_diff(w[1].0)) - (w[1].1 - w[0].1);
            (twice.rem_euclid(2) == 0).then_some(twice / 2)
        })
    }

    pub fn is_snake(&self) -> bool {
        self.steps().all(|p| p.is_some_and(|p| p <= 0))
    }

    pub fn is_prime_snake(&self) -> bool {
        self.is_snake()
            && self.points.windows(2).all(|w| {
                rset(&self.rank, w[0].0, w[1].0, 1, 1).is_ok_and(|s| s.contains(w[1].1 - w[0].1))
            })
    }

    pub fn to_poly(&self) -> DrinfeldPoly {
        DrinfeldPoly::from_factors(self.rank, self.points.iter().map(|&(i, m)| KrFactor::new(i, m, 1)))
            .expect("snake nodes are checked on construction")
    }
}

pub fn snake_to_poly(s: &Snake) -> DrinfeldPoly {
    s.to_poly()
}

/// The skew diagram `λ \ μ` for `A_n`: `λ` has `m + n + 1` parts and `μ` has `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    rank: DynkinA,
    lambda: Vec<i64>,
    mu: Vec<i64>,
}

/// One cell `k | r` of the exponent and length table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewCell {
    pub exponent: i64,
    pub length: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPoly {
    pub poly: DrinfeldPoly,
    /// Rows indexed by `l`, columns by the color `i`.
    pub table: Vec<Vec<SkewCell>>,
}

impl SkewShape {
    pub fn new(rank: DynkinA, lambda: Vec<i64>, mu: Vec<i64>) -> Result<Self> {
        let n = rank.rank() as usize;
        let m = mu.len();
        if lambda.len() != m + n + 1 {
            return Err(Error::ShapeInvalid(format!("lambda needs {} parts, got {}", m + n + 1, lambda.len())));
        }
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ShapeInvalid("lambda is not weakly decreasing".into()));
        }
        if mu.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ShapeInvalid("mu is not weakly decreasing".into()));
        }
        for (k, &part) in mu.iter().enumerate() {
            if !(lambda[k] >= part && part >= lambda[k + n + 1]) {
                return Err(Error::ShapeInvalid(format!("mu_{} = {part} is not between its lambda bounds", k + 1)));
            }
        }
        Ok(SkewShape { rank, lambda, mu })
    }

    pub fn rank(&self) -> DynkinA {
        self.rank
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    /// `ν[l-1][i-1] = median(μ_{l-1}, μ_l, λ_{i+l-1})` with `μ_0 = +∞`, `μ_{m+1} = -∞`.
    pub fn nu_table(&self) -> Vec<Vec<i64>> {
        let m = self.mu.len();
        let n = self.rank.rank() as usize;
        let mu = |l: usize| match l {
            0 => i64::MAX,
            l if l == m + 1 => i64::MIN,
            l => self.mu[l - 1],
        };
        (1..=m + 1)
            .map(|l| (1..=n + 1).map(|i| median(mu(l - 1), mu(l), self.lambda[i + l - 2])).collect())
            .collect()
    }

    pub fn to_poly(&self) -> SkewPoly {
        let nu = self.nu_table();
        let n = self.rank.rank() as usize;
        let mut factors = Vec::new();
        let table = nu
            .iter()
            .enumerate()
            .map(|(row, line)| {
                let l = row as i64 + 1;
                (1..=n)
                    .map(|i| {
                        let (a, b) = (line[i - 1], line[i]);
                        let cell = SkewCell { exponent: a + b - 2 * l + 1 - i as i64, length: (a - b) as u32 };
                        if cell.length > 0 {
                            factors.push(KrFactor::new(i as Node, cell.exponent, cell.length));
                        }
                        cell
                    })
                    .collect()
            })
            .collect();
        let poly = DrinfeldPoly::from_factors(self.rank, factors).expect("colors lie in 1..=n");
        SkewPoly { poly, table }
    }
}

pub fn skew_nu_table(shape: &SkewShape) -> Vec<Vec<i64>> {
    shape.nu_table()
}

pub fn skew_to_poly(shape: &SkewShape) -> SkewPoly {
    shape.to_poly()
}

fn median(a: i64, b: i64, c: i64) -> i64 {
    a.min(b).max(a.max(b).min(c))
}
