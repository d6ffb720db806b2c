use std::cmp::Ordering;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    #[serde(rename = "grevlex")]
    GrevLex,
}

/// A monomial order on exponent vectors.
///
/// `priority` lists variable indices from most to least significant; the
/// identity permutation makes the first variable the largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(arity: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..arity).collect(),
        }
    }

    pub fn grevlex(arity: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::GrevLex,
            priority: (0..arity).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.priority.len()
    }

    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.priority.len()];
        self.priority.iter().all(|&i| i < seen.len() && !std::mem::replace(&mut seen[i], true))
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.priority {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => {
                let da: u64 = a.iter().map(|&x| x as u64).sum();
                let db: u64 = b.iter().map(|&x| x as u64).sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &i in self.priority.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}
