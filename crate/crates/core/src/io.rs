//! Input formats: groups as JSON (degree + generator cycle lists), algebras
//! as JSON structure-constant tables, and the cycle notation used on the
//! command line.

use serde::Deserialize;
use thiserror::Error;

use crate::algebras::{AlgebraError, Extension, FDAlgebra};
use crate::exact::reducer::SparseVec;
use crate::exact::{parse_rational, Cyclotomic, Field, Rational};
use crate::perm::{GroupError, PermGroup, Permutation};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("invalid cycle notation `{0}`")]
    BadCycles(String),
    #[error("invalid scalar literal `{0}`")]
    BadScalar(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Group input file: `{ "degree": n, "generators": [[[0,1],[2,3]], ...] }`
/// with each generator a list of cycles.
#[derive(Debug, Deserialize)]
pub struct GroupInput {
    pub degree: usize,
    pub generators: Vec<Vec<Vec<usize>>>,
}

impl GroupInput {
    pub fn build(&self, cap: usize) -> Result<PermGroup, InputError> {
        let gens = self
            .generators
            .iter()
            .map(|cycles| Permutation::from_cycles(self.degree, cycles))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PermGroup::generate_capped(self.degree, gens, cap)?)
    }
}

/// Ground field choice for algebra inputs.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum FieldInput {
    Name(String),
    Cyclotomic { cyclotomic: u32 },
}

/// Algebra input file:
/// `{ "dim": d, "field": "Q" | {"cyclotomic": m},
///    "structure": [[[ [k, "num/den"], ...], ...], ...],
///    "unit": ["num/den", ...], "subalgebra": [["num/den", ...], ...] }`
/// where `structure[i][j]` lists the nonzero coordinates of x_i·x_j.
#[derive(Debug, Deserialize)]
pub struct AlgebraInput {
    pub dim: usize,
    pub field: FieldInput,
    pub structure: Vec<Vec<Vec<(usize, String)>>>,
    pub unit: Vec<String>,
    pub subalgebra: Vec<Vec<String>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

impl AlgebraInput {
    fn scalars<F: Field>(&self, parse: &dyn Fn(&str) -> Result<F, InputError>) -> Result<(FDAlgebra<F>, Vec<Vec<F>>), InputError> {
        if self.structure.len() != self.dim
            || self.structure.iter().any(|row| row.len() != self.dim)
            || self.unit.len() != self.dim
        {
            return Err(InputError::Algebra(AlgebraError::BadShape));
        }
        let labels = match &self.labels {
            Some(l) if l.len() == self.dim => l.clone(),
            Some(_) => return Err(InputError::Algebra(AlgebraError::BadShape)),
            None => (0..self.dim).map(|i| format!("x{i}")).collect(),
        };
        let mut table: Vec<SparseVec<F>> = vec![Vec::new(); self.dim * self.dim];
        for (i, row) in self.structure.iter().enumerate() {
            for (j, entries) in row.iter().enumerate() {
                let mut sparse: SparseVec<F> = Vec::new();
                for (k, lit) in entries {
                    if *k >= self.dim {
                        return Err(InputError::Algebra(AlgebraError::BadShape));
                    }
                    sparse.push((*k, parse(lit)?));
                }
                sparse.sort_by_key(|e| e.0);
                table[i * self.dim + j] = sparse;
            }
        }
        let unit = self.unit.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
        let algebra = FDAlgebra::new(labels, table, unit)?;
        let sub = self
            .subalgebra
            .iter()
            .map(|v| {
                if v.len() != self.dim {
                    return Err(InputError::Algebra(AlgebraError::BadShape));
                }
                v.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((algebra, sub))
    }

    pub fn build_rational(&self) -> Result<Extension<Rational>, InputError> {
        let parse = |s: &str| -> Result<Rational, InputError> {
            parse_rational(s).map_err(|_| InputError::BadScalar(s.to_owned()))
        };
        let (algebra, sub) = self.scalars(&parse)?;
        Ok(Extension::new(algebra, &sub)?)
    }

    pub fn build_cyclotomic(&self, conductor: u32) -> Result<Extension<Cyclotomic>, InputError> {
        let parse = move |s: &str| -> Result<Cyclotomic, InputError> {
            let q = parse_rational(s).map_err(|_| InputError::BadScalar(s.to_owned()))?;
            Ok(Cyclotomic::from_rational(q).embed_trivially(conductor))
        };
        let (algebra, sub) = self.scalars(&parse)?;
        Ok(Extension::new(algebra, &sub)?)
    }
}

impl Cyclotomic {
    /// Views a rational constant inside ℚ(ζ_m) without changing the value.
    pub fn embed_trivially(&self, conductor: u32) -> Cyclotomic {
        let m = num_integer::lcm(self.conductor(), conductor);
        self.embed(m)
    }
}

/// Parses one or more generators in cycle notation: `"(0 1)(2 3); (0 2)"`
/// splits generators on `;`, cycles on parentheses; points separated by
/// spaces or commas, or single digits when run together (`"(01)"`).
pub fn parse_generators(input: &str, degree: usize) -> Result<Vec<Permutation>, InputError> {
    input
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|gen| {
            let cycles = parse_cycles(gen)?;
            Permutation::from_cycles(degree, &cycles).map_err(InputError::from)
        })
        .collect()
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>, InputError> {
    let bad = || InputError::BadCycles(s.to_owned());
    let trimmed = s.trim();
    if trimmed == "()" || trimmed.is_empty() {
        return Ok(vec![]);
    }
    if !trimmed.starts_with('(') || !trimmed.ends_with(')') {
        return Err(bad());
    }
    let mut cycles = Vec::new();
    for part in trimmed[1..trimmed.len() - 1].split(")(") {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let points: Vec<usize> = if part.contains(|c: char| c == ',' || c.is_whitespace()) {
            part.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            part.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>, _>>()?
        };
        if points.is_empty() {
            return Err(bad());
        }
        cycles.push(points);
    }
    Ok(cycles)
}
