//! Families of subsets of `[n]`: union closure and union representations.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::count::BigCount;
use crate::enumerate::ORACLE_LIMIT;
use crate::error::{Error, Result};

pub type Subset = BTreeSet<usize>;

/// Largest ground set handled; members are stored as machine words.
pub const GROUND_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyMode {
    /// Members are pairwise distinct sets.
    #[default]
    Set,
    /// Members are indexed by position and may repeat.
    Indexed,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub struct SetFamily {
    n: usize,
    members: Vec<Subset>,
    mode: FamilyMode,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    n: usize,
    sets: Vec<Subset>,
    #[serde(default)]
    mode: FamilyMode,
}

impl TryFrom<RawFamily> for SetFamily {
    type Error = Error;
    fn try_from(r: RawFamily) -> Result<Self> {
        SetFamily::new(r.n, r.sets, r.mode)
    }
}

impl From<SetFamily> for RawFamily {
    fn from(f: SetFamily) -> Self {
        RawFamily {
            n: f.n,
            sets: f.members,
            mode: f.mode,
        }
    }
}

fn mask(s: &Subset) -> u64 {
    s.iter().fold(0, |m, &i| m | (1 << (i - 1)))
}

fn unmask(m: u64) -> Subset {
    (0..64).filter(|i| m & (1 << i) != 0).map(|i| i + 1).collect()
}

impl SetFamily {
    pub fn new(n: usize, members: impl IntoIterator<Item = Subset>, mode: FamilyMode) -> Result<Self> {
        if n > GROUND_LIMIT {
            return Err(Error::TooLarge {
                what: "ground set",
                size: n,
                limit: GROUND_LIMIT,
            });
        }
        let members: Vec<Subset> = members.into_iter().collect();
        for (i, m) in members.iter().enumerate() {
            if let Some(&x) = m.iter().find(|&&x| x == 0 || x > n) {
                return Err(Error::BadFamily(format!("member {} contains {x}, outside 1..={n}", i + 1)));
            }
        }
        if mode == FamilyMode::Set {
            let mut seen = HashMap::new();
            for (i, m) in members.iter().enumerate() {
                if let Some(j) = seen.insert(m, i) {
                    return Err(Error::BadFamily(format!(
                        "members {} and {} are equal; use indexed mode for repeated sets",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(SetFamily { n, members, mode })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn mode(&self) -> FamilyMode {
        self.mode
    }

    fn masks(&self) -> Vec<u64> {
        self.members.iter().map(mask).collect()
    }

    fn guard(&self) -> Result<()> {
        let size = self.n.min(self.members.len());
        if size > ORACLE_LIMIT {
            return Err(Error::TooLarge {
                what: "union closure",
                size,
                limit: ORACLE_LIMIT,
            });
        }
        Ok(())
    }

    fn target_mask(&self, target: &Subset) -> Result<u64> {
        if let Some(&x) = target.iter().find(|&&x| x == 0 || x > self.n) {
            return Err(Error::Input(format!("target contains {x}, outside 1..={}", self.n)));
        }
        Ok(mask(target))
    }
}

fn closure_masks(f: &SetFamily) -> Result<HashSet<u64>> {
    f.guard()?;
    let mut closure: HashSet<u64> = HashSet::from([0]);
    for m in f.masks() {
        let grown: Vec<u64> = closure.iter().map(|c| c | m).collect();
        closure.extend(grown);
    }
    Ok(closure)
}

/// All unions of subfamilies, the empty union included, sorted.
pub fn union_closure(f: &SetFamily) -> Result<Vec<Subset>> {
    let mut out: Vec<Subset> = closure_masks(f)?.into_iter().map(unmask).collect();
    out.sort();
    Ok(out)
}

pub fn count_union_closure(f: &SetFamily) -> Result<BigCount> {
    Ok(BigCount::from(closure_masks(f)?.len()))
}

/// Number of subfamilies (by position) whose union is exactly `target`.
/// Only members inside `target` can take part; a table keyed by partial
/// union absorbs them one at a time.
pub fn count_union_representations(f: &SetFamily, target: &Subset) -> Result<BigCount> {
    f.guard()?;
    let t = f.target_mask(target)?;
    let mut table: HashMap<u64, BigCount> = HashMap::from([(0, BigCount::one())]);
    for m in f.masks().into_iter().filter(|m| m & !t == 0) {
        let moved: Vec<(u64, BigCount)> = table.iter().map(|(&u, c)| (u | m, c.clone())).collect();
        for (u, c) in moved {
            *table.entry(u).or_default() += c;
        }
    }
    Ok(table.remove(&t).unwrap_or_default())
}

/// Brute force over every subfamily.
pub mod oracle {
    use super::*;

    fn sweep(f: &SetFamily, mut visit: impl FnMut(u64)) -> Result<()> {
        let p = f.members.len();
        if p > ORACLE_LIMIT {
            return Err(Error::TooLarge {
                what: "family",
                size: p,
                limit: ORACLE_LIMIT,
            });
        }
        let masks = f.masks();
        for pick in 0u64..(1 << p) {
            let union = (0..p).filter(|i| pick & (1 << i) != 0).fold(0, |u, i| u | masks[i]);
            visit(union);
        }
        Ok(())
    }

    pub fn union_closure(f: &SetFamily) -> Result<Vec<Subset>> {
        let mut seen = BTreeSet::new();
        sweep(f, |u| {
            seen.insert(unmask(u));
        })?;
        Ok(seen.into_iter().collect())
    }

    pub fn count_union_representations(f: &SetFamily, target: &Subset) -> Result<BigCount> {
        let t = f.target_mask(target)?;
        let mut count = 0u64;
        sweep(f, |u| count += (u == t) as u64)?;
        Ok(BigCount::from(count))
    }
}
