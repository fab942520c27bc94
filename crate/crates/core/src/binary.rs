//! Delta-matroids of symmetric GF(2) matrices and intersection graphs.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mask::{GroundSet, SubsetMask, MAX_GROUND_SIZE};
use crate::setsystem::SetSystem;

/// Symmetric matrix over GF(2); row `i` is a bit vector with bit `j` set iff
/// entry `(i, j)` is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2SymMatrix {
    rows: Vec<u64>,
}

impl Gf2SymMatrix {
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_GROUND_SIZE {
            return Err(Error::GroundSetTooLarge(n));
        }
        for (i, &row) in rows.iter().enumerate() {
            if !SubsetMask::from_bits(row).fits(n) {
                return Err(Error::MaskOutOfRange { mask: row, n });
            }
            for j in SubsetMask::from_bits(row).iter() {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::Asymmetric(i, j));
                }
            }
        }
        Ok(Gf2SymMatrix { rows })
    }

    /// Builds from a dense 0/1 table.
    pub fn from_entries(entries: &[Vec<u8>]) -> Result<Self> {
        let n = entries.len();
        let rows = entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != n {
                    return Err(Error::parse(
                        i + 2,
                        format!("expected {n} entries, found {}", row.len()),
                    ));
                }
                row.iter().enumerate().try_fold(0u64, |acc, (j, &v)| match v {
                    0 => Ok(acc),
                    1 => Ok(acc | 1 << j),
                    _ => Err(Error::parse(i + 2, format!("entry {v} is not 0 or 1"))),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Gf2SymMatrix::from_rows(rows)
    }

    pub fn zero(n: usize) -> Self {
        Gf2SymMatrix { rows: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        Gf2SymMatrix {
            rows: (0..n).map(|i| 1u64 << i).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let (bi, bj) = (1u64 << i, 1u64 << j);
        if value {
            self.rows[i] |= bj;
            self.rows[j] |= bi;
        } else {
            self.rows[i] &= !bj;
            self.rows[j] &= !bi;
        }
    }

    /// Whether the principal submatrix on `a` is invertible. The empty
    /// submatrix counts as non-singular.
    pub fn is_nonsingular(&self, a: SubsetMask) -> bool {
        assert!(a.fits(self.n()), "subset outside a {}x{} matrix", self.n(), self.n());
        let mut pending: Vec<u64> = a.iter().map(|i| self.rows[i] & a.bits()).collect();
        // Eliminate column by column, lowest index first.
        for col in a.iter() {
            let bit = 1u64 << col;
            let Some(p) = pending.iter().position(|r| r & bit != 0) else {
                return false;
            };
            let pivot = pending.swap_remove(p);
            for r in pending.iter_mut() {
                if *r & bit != 0 {
                    *r ^= pivot;
                }
            }
        }
        true
    }
}

impl fmt::Display for Gf2SymMatrix {
    /// The `.gf2` text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n())?;
        for i in 0..self.n() {
            let row: Vec<&str> = (0..self.n()).map(|j| if self.get(i, j) { "1" } else { "0" }).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

pub fn gf2_nonsingular(m: &Gf2SymMatrix, a: SubsetMask) -> bool {
    m.is_nonsingular(a)
}

/// `D(C)` over the ground set `1..=n`.
pub fn from_matrix(c: &Gf2SymMatrix) -> SetSystem {
    let ground = GroundSet::numbered(c.n()).expect("matrix dimension is at most 64");
    from_matrix_on(c, Arc::new(ground))
}

/// `D(C)` with rows and columns indexed by `ground`.
pub fn from_matrix_on(c: &Gf2SymMatrix, ground: Arc<GroundSet>) -> SetSystem {
    assert_eq!(ground.len(), c.n(), "ground set and matrix disagree in size");
    assert!(
        c.n() < 64,
        "cannot enumerate principal minors of a {0}x{0} matrix",
        c.n()
    );
    let family: Vec<SubsetMask> = (0..1u64 << c.n())
        .into_par_iter()
        .map(SubsetMask::from_bits)
        .filter(|&a| c.is_nonsingular(a))
        .collect();
    SetSystem::from_parts(ground, family)
}

/// The unique `C` with `D = D(C)` for a normal binary delta-matroid `D`.
///
/// Diagonal entries come from singleton feasibility, off-diagonal ones from
/// pair feasibility (`det [[a, c], [c, b]] = ab + c` over GF(2)); the result
/// is then checked against the whole family.
pub fn reconstruct_matrix(d: &SetSystem) -> Result<Gf2SymMatrix> {
    if !d.is_normal() {
        return Err(Error::NotNormal);
    }
    let n = d.n();
    let mut c = Gf2SymMatrix::zero(n);
    for e in 0..n {
        c.set(e, e, d.contains(SubsetMask::singleton(e)));
    }
    for u in 0..n {
        for v in u + 1..n {
            let pair = d.contains(SubsetMask::from_indices([u, v]));
            c.set(u, v, pair ^ (c.get(u, u) && c.get(v, v)));
        }
    }
    if from_matrix_on(&c, d.shared_ground()) != *d {
        return Err(Error::NotBinary);
    }
    Ok(c)
}

/// Label-preserving binary test: the first twist (in canonical order) that
/// is some `D(C)`, with its matrix.
pub fn binary_twist(d: &SetSystem) -> Option<(SubsetMask, Gf2SymMatrix)> {
    if !d.is_proper() || d.n() >= 64 {
        return None;
    }
    // Only twists by a feasible set are normal.
    d.family()
        .iter()
        .copied()
        .find_map(|a| reconstruct_matrix(&d.twist(a)).ok().map(|c| (a, c)))
}

/// A simple graph with at most one loop per vertex, stored as its GF(2)
/// adjacency matrix (diagonal = loops).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LoopedSimpleGraph {
    vertices: Arc<GroundSet>,
    adjacency: Gf2SymMatrix,
}

impl LoopedSimpleGraph {
    pub fn new(vertices: Arc<GroundSet>, adjacency: Gf2SymMatrix) -> Result<Self> {
        if vertices.len() != adjacency.n() {
            return Err(Error::DimensionMismatch {
                vertices: vertices.len(),
                matrix: adjacency.n(),
            });
        }
        Ok(LoopedSimpleGraph { vertices, adjacency })
    }

    pub fn vertices(&self) -> &GroundSet {
        &self.vertices
    }

    pub fn adjacency(&self) -> &Gf2SymMatrix {
        &self.adjacency
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.adjacency.get(v, v)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency.get(u, v)
    }

    /// Non-loop edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.adjacency.n();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.adjacency.get(u, v))
            .collect()
    }
}

impl fmt::Display for LoopedSimpleGraph {
    /// One `name: loop` / `name: -` line per vertex, then `edges:` and one
    /// `u v` line per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vertices.names().collect();
        for (v, name) in names.iter().enumerate() {
            writeln!(f, "{name}: {}", if self.has_loop(v) { "loop" } else { "-" })?;
        }
        writeln!(f, "edges:")?;
        for (u, v) in self.edges() {
            writeln!(f, "{} {}", names[u], names[v])?;
        }
        Ok(())
    }
}

pub fn intersection_graph(d: &SetSystem) -> Result<LoopedSimpleGraph> {
    let c = reconstruct_matrix(d)?;
    LoopedSimpleGraph::new(d.shared_ground(), c)
}

pub fn graph_to_dm(g: &LoopedSimpleGraph) -> SetSystem {
    from_matrix_on(&g.adjacency, Arc::clone(&g.vertices))
}
