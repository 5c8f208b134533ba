//! Cayley tables, exhaustive Latin-square enumeration at tiny orders, and
//! the subtraction table of the integers mod k. The induced arc labelling
//! `g(u -> v) = f(v) - f(u)` is evaluation of that table at the endpoint
//! labels, which is why its commutativity pattern matters here.

use crate::{Error, Result};

/// Multiplication table of a binary operation on `{0, .., order-1}`, stored
/// row-major: entry `(a, b)` is `a * b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    cells: Vec<u8>,
}

impl CayleyTable {
    /// Wraps a row-major cell vector of length `order^2` whose entries are
    /// all below `order`.
    pub fn new(order: usize, cells: Vec<u8>) -> Result<Self> {
        if order == 0 || order > 255 {
            return Err(Error::OrderOutOfRange {
                what: "Cayley table",
                order,
                min: 1,
                max: 255,
            });
        }
        if cells.len() != order * order {
            return Err(Error::Parse {
                line: 0,
                msg: format!(
                    "Cayley table of order {order} needs {} cells, got {}",
                    order * order,
                    cells.len()
                ),
            });
        }
        if let Some(&bad) = cells.iter().find(|&&c| usize::from(c) >= order) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("cell value {bad} outside 0..{order}"),
            });
        }
        Ok(Self { order, cells })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Value of `a * b`.
    pub fn get(&self, a: usize, b: usize) -> u8 {
        assert!(a < self.order && b < self.order, "argument out of range");
        self.cells[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.cells.chunks(self.order).map(<[u8]>::to_vec).collect()
    }

    /// True when every row and every column is a permutation, i.e. the table
    /// is a quasigroup.
    pub fn is_latin(&self) -> bool {
        let n = self.order;
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                row_seen[usize::from(self.get(i, j))] = true;
                col_seen[usize::from(self.get(j, i))] = true;
            }
            if !row_seen.iter().all(|&s| s) || !col_seen.iter().all(|&s| s) {
                return false;
            }
        }
        true
    }

    /// True when `a * b = b * a` for every pair.
    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.get(a, b) == self.get(b, a)))
    }

    /// Pairs `(a, b)` with `a * b = b * a`, in lexicographic order.
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                if self.get(a, b) == self.get(b, a) {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }
}

/// Every quasigroup (Latin square) of the given order, in lexicographic
/// order of the row-major cell vector. Capped at order 4, where there are
/// 576 of them.
pub fn enumerate_quasigroups(order: usize) -> Result<Vec<CayleyTable>> {
    if order < 1 {
        return Err(Error::OrderOutOfRange {
            what: "quasigroup enumeration",
            order,
            min: 1,
            max: 4,
        });
    }
    if order > 4 {
        return Err(Error::SizeCap {
            what: "quasigroup enumeration",
            requested: order as u64,
            cap: 4,
        });
    }
    let n = order;
    let mut cells = vec![0u8; n * n];
    let mut out = Vec::new();
    fn fill(n: usize, at: usize, cells: &mut Vec<u8>, out: &mut Vec<CayleyTable>) {
        if at == n * n {
            out.push(CayleyTable::new(n, cells.clone()).expect("filled cells are valid"));
            return;
        }
        let (r, c) = (at / n, at % n);
        'candidates: for v in 0..n as u8 {
            for j in 0..c {
                if cells[r * n + j] == v {
                    continue 'candidates;
                }
            }
            for i in 0..r {
                if cells[i * n + c] == v {
                    continue 'candidates;
                }
            }
            cells[at] = v;
            fill(n, at + 1, cells, out);
        }
        cells[at] = 0;
    }
    fill(n, 0, &mut cells, &mut out);
    Ok(out)
}

/// The subtraction table of the integers mod `k`: entry `(a, b)` is
/// `(b - a) mod k`, so evaluating it at two vertex labels gives the induced
/// arc label of the arc from the first to the second.
pub fn zk_minus_table(k: usize) -> Result<CayleyTable> {
    if !(2..=255).contains(&k) {
        return Err(Error::OrderOutOfRange {
            what: "subtraction table",
            order: k,
            min: 2,
            max: 255,
        });
    }
    let cells = (0..k)
        .flat_map(|a| (0..k).map(move |b| ((b + k - a) % k) as u8))
        .collect();
    CayleyTable::new(k, cells)
}
