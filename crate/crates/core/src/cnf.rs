//! CNF formulas: DIMACS text, evaluation and a brute-force oracle.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("DIMACS parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("literal {literal} refers to a variable outside 1..={vars}")]
    LiteralOutOfRange { literal: i32, vars: usize },
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("clause {index} has {len} literals, expected 3")]
    Arity { index: usize, len: usize },
    #[error("{0} variables exceed the brute-force limit")]
    TooLarge(usize),
}

/// Largest variable count accepted by [`CnfFormula::brute_force_model`].
pub const BRUTE_FORCE_MAX_VARS: usize = 24;

/// Conjunction of clauses over variables `1..=num_vars`. Literal `-x` is the
/// negation of variable `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self, CnfError> {
        for (i, c) in clauses.iter().enumerate() {
            if c.is_empty() {
                return Err(CnfError::EmptyClause(i));
            }
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > num_vars {
                    return Err(CnfError::LiteralOutOfRange { literal: l, vars: num_vars });
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Fails unless every clause has exactly three literals.
    pub fn check_3cnf(&self) -> Result<(), CnfError> {
        match self.clauses.iter().position(|c| c.len() != 3) {
            Some(index) => Err(CnfError::Arity { index, len: self.clauses[index].len() }),
            None => Ok(()),
        }
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }

    /// First model in lexicographic order (false < true, variable 1 most
    /// significant), found by exhaustive search.
    pub fn brute_force_model(&self) -> Result<Option<Vec<bool>>, CnfError> {
        let n = self.num_vars;
        if n > BRUTE_FORCE_MAX_VARS {
            return Err(CnfError::TooLarge(n));
        }
        let mut a = vec![false; n];
        for bits in 0u64..1 << n {
            for (i, x) in a.iter_mut().enumerate() {
                *x = bits >> (n - 1 - i) & 1 == 1;
            }
            if self.evaluate(&a) {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }

    pub fn parse_dimacs(text: &str) -> Result<Self, CnfError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |message: String| CnfError::Parse { line: idx + 1, message };
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if header.is_some() || parts.len() != 4 || parts[1] != "cnf" {
                    return Err(err(format!("bad problem line {line:?}")));
                }
                let v = parts[2].parse().map_err(|_| err("bad variable count".into()))?;
                let c = parts[3].parse().map_err(|_| err("bad clause count".into()))?;
                header = Some((v, c));
                continue;
            }
            if header.is_none() {
                return Err(err("clause before the problem line".into()));
            }
            for tok in line.split_whitespace() {
                let l: i32 = tok.parse().map_err(|_| err(format!("bad literal {tok:?}")))?;
                if l == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.push(l);
                }
            }
        }
        let Some((vars, count)) = header else {
            return Err(CnfError::Parse { line: 0, message: "missing problem line".into() });
        };
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != count {
            return Err(CnfError::Parse {
                line: 0,
                message: format!("header announces {count} clauses, found {}", clauses.len()),
            });
        }
        Self::new(vars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                write!(s, "{l} ").expect("writing to a String");
            }
            s.push_str("0\n");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_round_trip() {
        let f = CnfFormula::parse_dimacs("c demo\np cnf 3 2\n1 -2 3 0\n-1 2\n3 0\n").unwrap();
        assert_eq!(f.clauses(), &[vec![1, -2, 3], vec![-1, 2, 3]]);
        assert_eq!(CnfFormula::parse_dimacs(&f.to_dimacs()).unwrap(), f);
        assert!(f.check_3cnf().is_ok());
    }

    #[test]
    fn dimacs_errors() {
        assert!(CnfFormula::parse_dimacs("1 2 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 2 1\n1 3 0\n").is_err());
        assert!(CnfFormula::parse_dimacs("p cnf 2 2\n1 2 0\n").is_err());
        let f = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        assert_eq!(f.check_3cnf(), Err(CnfError::Arity { index: 0, len: 2 }));
    }

    #[test]
    fn brute_force_finds_models() {
        let all_signs: Vec<Vec<i32>> =
            (0..8).map(|m| (1..=3).map(|v| if m >> (v - 1) & 1 == 1 { -v } else { v }).collect()).collect();
        let unsat = CnfFormula::new(3, all_signs).unwrap();
        assert_eq!(unsat.brute_force_model().unwrap(), None);
        let sat = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(sat.brute_force_model().unwrap(), Some(vec![false, false, true]));
    }
}
