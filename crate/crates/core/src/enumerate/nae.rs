use std::fmt;

use serde::{Deserialize, Serialize};

use crate::count::BigCount;
use crate::error::{Error, Result};

/// Monotone 3-NAE formula over variables `1..=vars`. Each clause names three
/// distinct variables and is satisfied unless all three take the same value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFormula", into = "RawFormula")]
pub struct NaeFormula {
    vars: usize,
    clauses: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFormula {
    vars: usize,
    clauses: Vec<[usize; 3]>,
}

impl TryFrom<RawFormula> for NaeFormula {
    type Error = Error;
    fn try_from(r: RawFormula) -> Result<Self> {
        NaeFormula::new(r.vars, r.clauses)
    }
}

impl From<NaeFormula> for RawFormula {
    fn from(f: NaeFormula) -> Self {
        RawFormula {
            vars: f.vars,
            clauses: f.clauses,
        }
    }
}

impl NaeFormula {
    pub fn new(vars: usize, clauses: impl IntoIterator<Item = [usize; 3]>) -> Result<Self> {
        let clauses: Vec<[usize; 3]> = clauses.into_iter().collect();
        for (i, c) in clauses.iter().enumerate() {
            if let Some(&v) = c.iter().find(|&&v| v == 0 || v > vars) {
                return Err(Error::BadFormula(format!("clause {} uses variable {v} outside 1..={vars}", i + 1)));
            }
            if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
                return Err(Error::BadFormula(format!("clause {} repeats a variable", i + 1)));
            }
        }
        Ok(NaeFormula { vars, clauses })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// True when the assignment (indexed by variable, position 0 unused)
    /// satisfies every clause.
    pub fn satisfied_by(&self, value: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| !(value[c[0]] == value[c[1]] && value[c[1]] == value[c[2]]))
    }
}

impl fmt::Display for NaeFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "true");
        }
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| format!("NAE({},{},{})", c[0], c[1], c[2]))
            .collect();
        write!(f, "{}", parts.join(" ∧ "))
    }
}

/// Clauses grouped by their largest variable, so each is checked as soon as
/// it is fully assigned.
struct Search<'a> {
    order: Vec<usize>,
    closing: Vec<Vec<&'a [usize; 3]>>,
    value: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(phi: &'a NaeFormula) -> Self {
        let mut used = vec![false; phi.vars + 1];
        for c in &phi.clauses {
            for &v in c {
                used[v] = true;
            }
        }
        let order: Vec<usize> = (1..=phi.vars).filter(|&v| used[v]).collect();
        let mut closing = vec![Vec::new(); order.len()];
        for c in &phi.clauses {
            let last = c.iter().map(|v| order.binary_search(v).unwrap()).max().unwrap();
            closing[last].push(c);
        }
        Search {
            order,
            closing,
            value: vec![false; phi.vars + 1],
        }
    }

    fn ok(&self, depth: usize) -> bool {
        self.closing[depth]
            .iter()
            .all(|c| !(self.value[c[0]] == self.value[c[1]] && self.value[c[1]] == self.value[c[2]]))
    }

    fn count(&mut self, depth: usize) -> BigCount {
        if depth == self.order.len() {
            return BigCount::one();
        }
        let mut total = BigCount::zero();
        for b in [false, true] {
            self.value[self.order[depth]] = b;
            if self.ok(depth) {
                total += self.count(depth + 1);
            }
        }
        total
    }

    fn any(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        for b in [false, true] {
            self.value[self.order[depth]] = b;
            if self.ok(depth) && self.any(depth + 1) {
                return true;
            }
        }
        false
    }
}

/// Number of satisfying assignments over all `2^vars` assignments.
pub fn count_nae_sat(phi: &NaeFormula) -> BigCount {
    let mut search = Search::new(phi);
    let free = phi.vars - search.order.len();
    search.count(0) * BigCount::pow2(free as u64)
}

pub fn is_satisfiable(phi: &NaeFormula) -> bool {
    Search::new(phi).any(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(count_nae_sat(&NaeFormula::new(3, [[1, 2, 3]]).unwrap()), BigCount::from(6u64));
        assert_eq!(count_nae_sat(&NaeFormula::new(5, []).unwrap()), BigCount::from(32u64));
        // built from K3: one clause per edge plus the shared variable 4
        let k3 = NaeFormula::new(4, [[1, 2, 4], [2, 3, 4], [1, 3, 4]]).unwrap();
        assert_eq!(count_nae_sat(&k3), BigCount::from(8u64));
    }

    #[test]
    fn satisfiability() {
        assert!(is_satisfiable(&NaeFormula::new(3, [[1, 2, 3]]).unwrap()));
        // a 2+2 split breaks every triple of four variables, but any
        // 2-colouring of five variables has a monochromatic triple
        let all = NaeFormula::new(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap();
        assert!(is_satisfiable(&all));
        let five = NaeFormula::new(5, (1..=5).flat_map(|a| (a + 1..=5).flat_map(move |b| (b + 1..=5).map(move |c| [a, b, c])))).unwrap();
        assert!(!is_satisfiable(&five));
        assert_eq!(count_nae_sat(&five), BigCount::zero());
    }

    #[test]
    fn rejects_bad_clauses() {
        assert!(NaeFormula::new(3, [[1, 1, 2]]).is_err());
        assert!(NaeFormula::new(3, [[1, 2, 4]]).is_err());
        assert!(NaeFormula::new(3, [[0, 1, 2]]).is_err());
    }

    #[test]
    fn json_shape() {
        let phi: NaeFormula = serde_json::from_str(r#"{"vars":4,"clauses":[[1,2,3]]}"#).unwrap();
        assert_eq!(phi.vars(), 4);
        assert_eq!(serde_json::to_string(&phi).unwrap(), r#"{"vars":4,"clauses":[[1,2,3]]}"#);
        assert!(serde_json::from_str::<NaeFormula>(r#"{"vars":2,"clauses":[[1,2,3]]}"#).is_err());
    }
}
