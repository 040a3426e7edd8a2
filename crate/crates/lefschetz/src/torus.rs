//! Lefschetz and Nielsen numbers of torus maps given by their action on first homology, and
//! lower bounds for connected sums of two tori.

use thiserror::Error;

use crate::linalg::{big_to_i64, determinant};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorusError {
    #[error("torus dimension must be at least 1")]
    ZeroDimension,
    #[error("expected a {p}x{p} matrix, got {rows} rows with lengths {lengths:?}")]
    NotSquare { p: usize, rows: usize, lengths: Vec<usize> },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("bad matrix entry `{0}`")]
    BadEntry(String),
    #[error("determinant does not fit in 64 bits")]
    Overflow,
}

/// Integer matrix of a self-map of the p-torus on H_1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusMapMatrix {
    p: usize,
    entries: Vec<Vec<i64>>,
}

impl TorusMapMatrix {
    pub fn new(p: usize, entries: Vec<Vec<i64>>) -> Result<TorusMapMatrix, TorusError> {
        if p == 0 {
            return Err(TorusError::ZeroDimension);
        }
        if entries.len() != p || entries.iter().any(|r| r.len() != p) {
            return Err(TorusError::NotSquare {
                p,
                rows: entries.len(),
                lengths: entries.iter().map(Vec::len).collect(),
            });
        }
        Ok(TorusMapMatrix { p, entries })
    }

    /// Rows separated by `;`, entries by whitespace: `"-1 0; 0 -1"`.
    pub fn parse(p: usize, text: &str) -> Result<TorusMapMatrix, TorusError> {
        let entries = text
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| TorusError::BadEntry(t.to_string())))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        TorusMapMatrix::new(p, entries)
    }

    pub fn scalar(p: usize, k: i64) -> TorusMapMatrix {
        let entries = (0..p)
            .map(|i| (0..p).map(|j| if i == j { k } else { 0 }).collect())
            .collect();
        TorusMapMatrix::new(p, entries).expect("square by construction")
    }

    pub fn identity(p: usize) -> TorusMapMatrix {
        TorusMapMatrix::scalar(p, 1)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }
}

/// det(I − A).
pub fn torus_lefschetz(m: &TorusMapMatrix) -> Result<i64, TorusError> {
    let shifted: Vec<Vec<i64>> = m
        .entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &a)| if i == j { 1 - a } else { -a })
                .collect()
        })
        .collect();
    big_to_i64(&determinant(&shifted)).ok_or(TorusError::Overflow)
}

/// |det(I − A)|.
pub fn torus_nielsen(m: &TorusMapMatrix) -> Result<i64, TorusError> {
    torus_lefschetz(m).map(i64::abs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriadBound {
    pub value: i64,
    /// Set when p < 3: the number is formal arithmetic only.
    pub warning: Option<String>,
}

/// |det(I−A₁)| + |det(I−A₂)| − 3.
pub fn triad_lower_bound(m1: &TorusMapMatrix, m2: &TorusMapMatrix) -> Result<TriadBound, TorusError> {
    if m1.p != m2.p {
        return Err(TorusError::DimensionMismatch(m1.p, m2.p));
    }
    let value = torus_nielsen(m1)? + torus_nielsen(m2)? - 3;
    let warning = (m1.p < 3).then(|| format!("p = {} < 3: bound is formal arithmetic only", m1.p));
    Ok(TriadBound { value, warning })
}

/// Sign relation between the Nielsen and Lefschetz numbers of both collapsed summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignCase {
    /// N = Λ on both summands.
    PlusPlus,
    /// N = −Λ on both summands.
    MinusMinus,
}

impl SignCase {
    /// The case shared by both summands, if any.
    pub fn of(m1: &TorusMapMatrix, m2: &TorusMapMatrix) -> Result<Option<SignCase>, TorusError> {
        let (l1, l2) = (torus_lefschetz(m1)?, torus_lefschetz(m2)?);
        Ok(match (l1 >= 0, l2 >= 0) {
            (true, true) => Some(SignCase::PlusPlus),
            _ if l1 <= 0 && l2 <= 0 => Some(SignCase::MinusMinus),
            _ => None,
        })
    }
}

/// Bound from the Lefschetz number of the whole connected sum and of the separating sphere.
pub fn triad_bound_via_lambda(lambda_total: i64, lambda_sphere: i64, case: SignCase) -> i64 {
    match case {
        SignCase::PlusPlus => lambda_total - lambda_sphere - 1,
        SignCase::MinusMinus => -lambda_total + lambda_sphere - 5,
    }
}

/// Λ(f, T₁ # T₂) by additivity over the two punctured summands and the separating sphere:
/// each collapsed summand contributes its torus number minus the collapsed point.
pub fn connected_sum_lambda(m1: &TorusMapMatrix, m2: &TorusMapMatrix, lambda_sphere: i64) -> Result<i64, TorusError> {
    if m1.p != m2.p {
        return Err(TorusError::DimensionMismatch(m1.p, m2.p));
    }
    Ok(torus_lefschetz(m1)? - 1 + torus_lefschetz(m2)? - 1 + lambda_sphere)
}
