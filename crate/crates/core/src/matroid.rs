//! Matroids with fully materialized rank tables, their lattices of flats,
//! minors, and the characteristic polynomial.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{AxiomViolation, Error, Result};
use crate::linalg;
use crate::subset::Subset;

pub const MAX_GROUND_SET: usize = 16;

/// A matroid on ground set `{0, .., n-1}` given by its full rank table,
/// indexed by bitset. Immutable after construction and always axiom-checked.
#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: Vec<u8>,
    name: Option<String>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid({}, n={}, rank={})",
            self.name.as_deref().unwrap_or("?"),
            self.n,
            self.full_rank()
        )
    }
}

/// Input descriptions accepted by [`Matroid::build`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MatroidSpec {
    /// Explicit rank table in bitset order (`2^n` entries).
    RankTable { n: usize, table: Vec<u8> },
    /// List of bases as element lists.
    Bases { n: usize, bases: Vec<Vec<usize>> },
    /// Exact rational matrix, one column per element; entries "p/q" or "p".
    Matrix { rows: Vec<Vec<String>> },
    /// Uniform matroid U_{r,n}.
    Uniform { r: usize, n: usize },
    /// Cycle matroid of a graph; elements are the listed edges.
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl Matroid {
    pub fn build(spec: &MatroidSpec, name: Option<String>) -> Result<Matroid> {
        match spec {
            MatroidSpec::RankTable { n, table } => {
                Matroid::from_rank_table(*n, table.clone(), name)
            }
            MatroidSpec::Bases { n, bases } => {
                let sets: Vec<Subset> = bases
                    .iter()
                    .map(|b| Subset::from_elements(b.iter().copied()))
                    .collect();
                Matroid::from_bases(*n, &sets, name)
            }
            MatroidSpec::Matrix { rows } => {
                let parsed = parse_rational_rows(rows)?;
                Matroid::from_matrix(&parsed, name)
            }
            MatroidSpec::Uniform { r, n } => Matroid::uniform(*r, *n, name),
            MatroidSpec::Graphic { vertices, edges } => Matroid::graphic(*vertices, edges, name),
        }
    }

    pub fn from_rank_table(n: usize, table: Vec<u8>, name: Option<String>) -> Result<Matroid> {
        check_ground_set(n)?;
        if table.len() != 1 << n {
            return Err(Error::Parse(format!(
                "rank table has {} entries, expected {}",
                table.len(),
                1usize << n
            )));
        }
        validate_rank_axioms(n, &table).map_err(Error::AxiomViolation)?;
        Ok(Matroid {
            n,
            rank: table,
            name,
        })
    }

    pub fn from_bases(n: usize, bases: &[Subset], name: Option<String>) -> Result<Matroid> {
        check_ground_set(n)?;
        if bases.is_empty() {
            return Err(Error::EmptyBases);
        }
        let r = bases[0].len();
        for b in bases {
            if b.len() != r {
                return Err(Error::NonEquicardinalBases(bases[0], *b));
            }
            if let Some(e) = b.iter().find(|&e| e >= n) {
                return Err(Error::OutOfRange { element: e, n });
            }
        }
        // rk(S) = max over bases of |S ∩ B|.
        let table: Vec<u8> = Subset::all(n)
            .map(|s| bases.iter().map(|b| s.intersect(*b).len()).max().unwrap() as u8)
            .collect();
        validate_rank_axioms(n, &table).map_err(Error::AxiomViolation)?;
        Ok(Matroid {
            n,
            rank: table,
            name,
        })
    }

    /// Rank function `rk(S) = dim span{v_i : i in S}` of the column vectors of
    /// an exact rational matrix. Denominators are cleared per row, then ranks
    /// are computed by fraction-free elimination over the integers.
    pub fn from_matrix(rows: &[Vec<BigRational>], name: Option<String>) -> Result<Matroid> {
        let n = rows.first().map_or(0, |r| r.len());
        check_ground_set(n)?;
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("matrix rows have unequal lengths".into()));
        }
        let int_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                let lcm = row.iter().fold(BigInt::from(1), |acc, x| {
                    num_integer::lcm(acc, x.denom().abs())
                });
                row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
            })
            .collect();
        let table: Vec<u8> = Subset::all(n)
            .map(|s| {
                let cols: Vec<usize> = s.iter().collect();
                let sub: Vec<Vec<BigInt>> = int_rows
                    .iter()
                    .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                    .collect();
                linalg::bigint_rank(sub) as u8
            })
            .collect();
        validate_rank_axioms(n, &table).map_err(Error::AxiomViolation)?;
        Ok(Matroid {
            n,
            rank: table,
            name,
        })
    }

    pub fn uniform(r: usize, n: usize, name: Option<String>) -> Result<Matroid> {
        check_ground_set(n)?;
        if r > n {
            return Err(Error::Parse(format!("uniform({r},{n}) needs r <= n")));
        }
        let table = Subset::all(n).map(|s| s.len().min(r) as u8).collect();
        Ok(Matroid {
            n,
            rank: table,
            name,
        })
    }

    pub fn graphic(
        vertices: usize,
        edges: &[(usize, usize)],
        name: Option<String>,
    ) -> Result<Matroid> {
        let n = edges.len();
        check_ground_set(n)?;
        for &(u, v) in edges {
            if u >= vertices || v >= vertices {
                return Err(Error::OutOfRange {
                    element: u.max(v),
                    n: vertices,
                });
            }
        }
        // rk(S) = vertices - #components of (V, S).
        let table: Vec<u8> = Subset::all(n)
            .map(|s| {
                let mut parent: Vec<usize> = (0..vertices).collect();
                fn find(parent: &mut [usize], mut x: usize) -> usize {
                    while parent[x] != x {
                        parent[x] = parent[parent[x]];
                        x = parent[x];
                    }
                    x
                }
                let mut components = vertices;
                for e in s.iter() {
                    let (u, v) = edges[e];
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru != rv {
                        parent[ru] = rv;
                        components -= 1;
                    }
                }
                (vertices - components) as u8
            })
            .collect();
        validate_rank_axioms(n, &table).map_err(Error::AxiomViolation)?;
        Ok(Matroid {
            n,
            rank: table,
            name,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Matroid {
        self.name = Some(name.into());
        self
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn rank_of(&self, s: Subset) -> Result<usize> {
        if !s.is_subset_of(self.ground_set()) {
            return Err(Error::OutOfRange {
                element: s.iter().last().unwrap_or(0),
                n: self.n,
            });
        }
        Ok(self.rank[s.bits() as usize] as usize)
    }

    /// Rank lookup without the range check; `s` must be within the ground set.
    pub fn rank(&self, s: Subset) -> usize {
        self.rank[s.bits() as usize] as usize
    }

    pub fn full_rank(&self) -> usize {
        self.rank(self.ground_set())
    }

    pub fn rank_table(&self) -> &[u8] {
        &self.rank
    }

    /// Smallest flat containing `s`.
    pub fn closure(&self, s: Subset) -> Subset {
        let r = self.rank(s);
        let mut c = s;
        for i in 0..self.n {
            if !c.contains(i) && self.rank(c.insert(i)) == r {
                c = c.insert(i);
            }
        }
        debug_assert_eq!(self.rank(c), r);
        c
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.closure(s) == s
    }

    pub fn loops(&self) -> Subset {
        Subset::from_elements((0..self.n).filter(|&i| self.rank(Subset::singleton(i)) == 0))
    }

    pub fn has_loops(&self) -> bool {
        !self.loops().is_empty()
    }

    /// Elements contained in every basis.
    pub fn coloops(&self) -> Subset {
        // i is a coloop iff deleting it drops the rank of E.
        let full = self.ground_set();
        let r = self.full_rank();
        Subset::from_elements((0..self.n).filter(|&i| self.rank(full.remove(i)) < r))
    }

    pub fn is_coloop(&self, i: usize) -> bool {
        self.coloops().contains(i)
    }

    /// Simple: rank-1 flats are precisely the singletons.
    pub fn is_simple(&self) -> bool {
        !self.has_loops()
            && (0..self.n).all(|i| self.closure(Subset::singleton(i)) == Subset::singleton(i))
    }

    pub fn bases(&self) -> Vec<Subset> {
        let r = self.full_rank();
        Subset::all(self.n)
            .filter(|s| s.len() == r && self.rank(*s) == r)
            .collect()
    }

    /// Deletion or contraction of a single element. The minor is relabeled to
    /// `0..n-2` order-preservingly; the returned [`ElementMap`] records the
    /// relabeling for all cross-matroid transport.
    pub fn minor(&self, kind: MinorKind, i: usize) -> Result<(Matroid, ElementMap)> {
        if i >= self.n {
            return Err(Error::OutOfRange {
                element: i,
                n: self.n,
            });
        }
        let map = ElementMap {
            parent_n: self.n,
            removed: i,
        };
        let base = match kind {
            MinorKind::Delete => 0,
            MinorKind::Contract => self.rank(Subset::singleton(i)),
        };
        let table: Vec<u8> = Subset::all(self.n - 1)
            .map(|s| {
                let parent = map.to_parent(s);
                match kind {
                    MinorKind::Delete => self.rank(parent) as u8,
                    MinorKind::Contract => (self.rank(parent.insert(i)) - base) as u8,
                }
            })
            .collect();
        let name = self.name.as_ref().map(|nm| {
            let op = match kind {
                MinorKind::Delete => "\\",
                MinorKind::Contract => "/",
            };
            format!("{nm}{op}{i}")
        });
        let m = Matroid {
            n: self.n - 1,
            rank: table,
            name,
        };
        debug_assert!(validate_rank_axioms(m.n, &m.rank).is_ok());
        Ok((m, map))
    }

    pub fn delete(&self, i: usize) -> Result<(Matroid, ElementMap)> {
        self.minor(MinorKind::Delete, i)
    }

    pub fn contract(&self, i: usize) -> Result<(Matroid, ElementMap)> {
        self.minor(MinorKind::Contract, i)
    }

    /// All flats, graded by rank, enumerated by closure-BFS.
    pub fn flats_lattice(&self) -> FlatLattice {
        let top_rank = self.full_rank();
        let mut by_rank: Vec<Vec<Subset>> = vec![Vec::new(); top_rank + 1];
        let mut frontier: BTreeSet<Subset> = BTreeSet::new();
        frontier.insert(self.closure(Subset::EMPTY));
        for (r, slot) in by_rank.iter_mut().enumerate() {
            *slot = frontier.iter().copied().collect();
            if r == top_rank {
                break;
            }
            let mut next = BTreeSet::new();
            for &f in &frontier {
                for i in 0..self.n {
                    if !f.contains(i) {
                        let g = self.closure(f.insert(i));
                        // Adding one element to a flat raises the rank by exactly one.
                        debug_assert_eq!(self.rank(g), r + 1);
                        next.insert(g);
                    }
                }
            }
            frontier = next;
        }
        FlatLattice { n: self.n, by_rank }
    }

    /// Characteristic polynomial via Möbius recursion on the lattice of
    /// flats; identically zero when the matroid has a loop.
    pub fn characteristic_polynomial(&self) -> IntPoly {
        if self.has_loops() {
            return IntPoly::zero();
        }
        let lattice = self.flats_lattice();
        let top_rank = self.full_rank();
        let flats: Vec<(Subset, usize)> = lattice
            .by_rank
            .iter()
            .enumerate()
            .flat_map(|(r, fs)| fs.iter().map(move |&f| (f, r)))
            .collect();
        // mu(0̂, F) by recursion over the lattice order.
        let mut mu: Vec<i64> = vec![0; flats.len()];
        for (idx, &(f, _)) in flats.iter().enumerate() {
            if f.is_empty() {
                mu[idx] = 1;
            } else {
                let mut below = 0i64;
                for (jdx, &(g, _)) in flats.iter().enumerate().take(idx) {
                    if g.is_proper_subset_of(f) {
                        below += mu[jdx];
                    }
                }
                mu[idx] = -below;
            }
        }
        let mut coeffs = vec![0i64; top_rank + 1];
        for (idx, &(_, r)) in flats.iter().enumerate() {
            coeffs[top_rank - r] += mu[idx];
        }
        IntPoly::new(coeffs)
    }
}

fn check_ground_set(n: usize) -> Result<()> {
    if n > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(())
}

fn parse_rational_rows(rows: &[Vec<String>]) -> Result<Vec<Vec<BigRational>>> {
    rows.iter()
        .map(|row| {
            row.iter()
                .map(|s| {
                    BigRational::from_str(s.trim())
                        .map_err(|e| Error::Parse(format!("bad rational '{s}': {e}")))
                })
                .collect()
        })
        .collect()
}

/// Checks normalization, monotonicity, and submodularity of a rank table,
/// returning the first counterexample in bitset order. Monotonicity and
/// submodularity are checked in their single-element local forms, which are
/// equivalent to the global axioms.
pub fn validate_rank_axioms(n: usize, table: &[u8]) -> std::result::Result<(), AxiomViolation> {
    assert_eq!(table.len(), 1 << n);
    for s in Subset::all(n) {
        let r = table[s.bits() as usize];
        if (r as usize) > s.len() {
            return Err(AxiomViolation::Cardinality {
                set: s,
                rank: r,
                size: s.len(),
            });
        }
    }
    for s in Subset::all(n) {
        let r = table[s.bits() as usize];
        for i in 0..n {
            if !s.contains(i) {
                let ri = table[s.insert(i).bits() as usize];
                if ri < r {
                    return Err(AxiomViolation::Monotonicity {
                        a: s,
                        b: s.insert(i),
                        rank_a: r,
                        rank_b: ri,
                    });
                }
            }
        }
    }
    for s in Subset::all(n) {
        let r = table[s.bits() as usize] as i32;
        for i in 0..n {
            if s.contains(i) {
                continue;
            }
            let ri = table[s.insert(i).bits() as usize] as i32;
            for j in i + 1..n {
                if s.contains(j) {
                    continue;
                }
                let rj = table[s.insert(j).bits() as usize] as i32;
                let rij = table[s.insert(i).insert(j).bits() as usize] as i32;
                if rij + r > ri + rj {
                    return Err(AxiomViolation::Submodularity {
                        a: s.insert(i),
                        b: s.insert(j),
                    });
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinorKind {
    Delete,
    Contract,
}

/// Order-preserving relabeling between a one-element minor and its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementMap {
    parent_n: usize,
    removed: usize,
}

impl ElementMap {
    /// The order-preserving relabeling for a minor of `{0, .., parent_n-1}`
    /// obtained by removing `removed`.
    pub fn removing(parent_n: usize, removed: usize) -> ElementMap {
        debug_assert!(removed < parent_n);
        ElementMap { parent_n, removed }
    }

    pub fn parent_n(&self) -> usize {
        self.parent_n
    }

    pub fn removed(&self) -> usize {
        self.removed
    }

    pub fn element_to_parent(&self, e: usize) -> usize {
        if e < self.removed {
            e
        } else {
            e + 1
        }
    }

    pub fn element_from_parent(&self, e: usize) -> Option<usize> {
        match e.cmp(&self.removed) {
            std::cmp::Ordering::Less => Some(e),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(e - 1),
        }
    }

    pub fn to_parent(&self, s: Subset) -> Subset {
        Subset::from_elements(s.iter().map(|e| self.element_to_parent(e)))
    }

    /// Minor-label image of a parent subset; the removed element must not occur.
    pub fn from_parent(&self, s: Subset) -> Subset {
        debug_assert!(!s.contains(self.removed));
        Subset::from_elements(s.iter().filter_map(|e| self.element_from_parent(e)))
    }
}

/// The lattice of flats of a matroid, graded by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatLattice {
    n: usize,
    by_rank: Vec<Vec<Subset>>,
}

impl FlatLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top_rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    pub fn by_rank(&self) -> &[Vec<Subset>] {
        &self.by_rank
    }

    pub fn flats_of_rank(&self, r: usize) -> &[Subset] {
        &self.by_rank[r]
    }

    pub fn top(&self) -> Subset {
        self.by_rank[self.top_rank()][0]
    }

    pub fn bottom(&self) -> Subset {
        self.by_rank[0][0]
    }

    /// All flats with their ranks, in (rank, bitset) order.
    pub fn all(&self) -> impl Iterator<Item = (Subset, usize)> + '_ {
        self.by_rank
            .iter()
            .enumerate()
            .flat_map(|(r, fs)| fs.iter().map(move |&f| (f, r)))
    }

    /// The nonempty flats L(M), in (rank, bitset) order.
    pub fn nonempty(&self) -> impl Iterator<Item = (Subset, usize)> + '_ {
        self.all().filter(|(f, _)| !f.is_empty())
    }

    /// The proper nonempty flats L̂(M), in (rank, bitset) order.
    pub fn proper_nonempty(&self) -> impl Iterator<Item = (Subset, usize)> + '_ {
        let top = self.top();
        self.nonempty().filter(move |&(f, _)| f != top)
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        self.by_rank.iter().any(|fs| fs.binary_search(&s).is_ok())
    }

    pub fn rank_of_flat(&self, s: Subset) -> Option<usize> {
        self.by_rank
            .iter()
            .position(|fs| fs.binary_search(&s).is_ok())
    }

    pub fn comparable(&self, a: Subset, b: Subset) -> bool {
        a.comparable(b)
    }

    /// `b` covers `a`: `a ⊊ b` with no flat strictly between.
    pub fn covers(&self, a: Subset, b: Subset) -> bool {
        if !a.is_proper_subset_of(b) {
            return false;
        }
        !self
            .all()
            .any(|(c, _)| a.is_proper_subset_of(c) && c.is_proper_subset_of(b))
    }
}

/// Integer polynomial in one variable `q`, coefficients in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly(Vec::new())
    }

    pub fn new(mut coeffs: Vec<i64>) -> IntPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// Exact division by (q - 1); returns None when q = 1 is not a root.
    pub fn div_q_minus_one(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.eval(1) != 0 {
            return None;
        }
        // Synthetic division by (q - 1).
        let mut out = vec![0i64; self.0.len() - 1];
        let mut carry = 0i64;
        for k in (1..self.0.len()).rev() {
            carry += self.0[k];
            out[k - 1] = carry;
        }
        Some(IntPoly::new(out))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_2_4() -> Matroid {
        // Columns (1,0,0), (0,1,0), (0,1,-1), (0,0,1).
        let rows = vec![
            vec!["1", "0", "0", "0"],
            vec!["0", "1", "1", "0"],
            vec!["0", "0", "-1", "1"],
        ];
        let rows: Vec<Vec<String>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(str::to_string).collect())
            .collect();
        Matroid::build(&MatroidSpec::Matrix { rows }, Some("example-2.4".into())).unwrap()
    }

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n, None).unwrap()
    }

    #[test]
    fn uniform_rank_table() {
        let m = u(2, 3);
        for s in Subset::all(3) {
            assert_eq!(m.rank(s), s.len().min(2));
        }
        assert_eq!(m.rank_of(Subset::from_elements([0, 1, 2])).unwrap(), 2);
    }

    #[test]
    fn example_matroid_ranks_match_the_arrangement() {
        let m = example_2_4();
        assert_eq!(m.n(), 4);
        assert_eq!(m.full_rank(), 3);
        assert_eq!(m.rank(Subset::from_elements([1, 2, 3])), 2);
        assert_eq!(m.rank(Subset::from_elements([0, 1, 2])), 3);
        assert_eq!(m.rank(Subset::EMPTY), 0);
        for pair in [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]] {
            assert_eq!(m.rank(Subset::from_elements(pair)), 2);
        }
    }

    #[test]
    fn bases_route_agrees_with_matrix_route() {
        let m = example_2_4();
        let bases = m.bases();
        assert_eq!(
            bases,
            vec![
                Subset::from_elements([0, 1, 2]),
                Subset::from_elements([0, 1, 3]),
                Subset::from_elements([0, 2, 3]),
            ]
        );
        let from_bases = Matroid::from_bases(4, &bases, None).unwrap();
        assert_eq!(from_bases.rank_table(), m.rank_table());
    }

    #[test]
    fn bases_error_paths() {
        assert_eq!(Matroid::from_bases(3, &[], None), Err(Error::EmptyBases));
        let bad = [Subset::from_elements([0, 1]), Subset::from_elements([2])];
        assert!(matches!(
            Matroid::from_bases(3, &bad, None),
            Err(Error::NonEquicardinalBases(_, _))
        ));
    }

    #[test]
    fn validator_finds_counterexamples() {
        // rk({0}) = 2 on n = 1 breaks the cardinality axiom.
        let err = validate_rank_axioms(1, &[0, 2]).unwrap_err();
        assert!(matches!(err, AxiomViolation::Cardinality { .. }));
        // rk(∅) = 1 breaks it at the empty set.
        let err = validate_rank_axioms(2, &[1, 1, 1, 2]).unwrap_err();
        assert_eq!(
            err,
            AxiomViolation::Cardinality {
                set: Subset::EMPTY,
                rank: 1,
                size: 0
            }
        );
        // Non-submodular: rk(01) + rk(∅) = 2 > rk(0) + rk(1) = 1.
        let err = validate_rank_axioms(2, &[0, 1, 0, 2]).unwrap_err();
        assert_eq!(
            err,
            AxiomViolation::Submodularity {
                a: Subset(1),
                b: Subset(2)
            }
        );
        // The free matroid table passes.
        assert!(validate_rank_axioms(2, &[0, 1, 1, 2]).is_ok());
    }

    #[test]
    fn closure_examples() {
        let m = example_2_4();
        assert_eq!(
            m.closure(Subset::from_elements([1, 2])),
            Subset::from_elements([1, 2, 3])
        );
        assert_eq!(m.closure(Subset::singleton(0)), Subset::singleton(0));
        assert_eq!(m.closure(Subset::EMPTY), Subset::EMPTY);
        // Closure oracle: union of all supersets of equal rank.
        for s in Subset::all(m.n()) {
            let r = m.rank(s);
            let brute = Subset::all(m.n())
                .filter(|t| s.is_subset_of(*t) && m.rank(*t) == r)
                .fold(s, Subset::union);
            assert_eq!(m.closure(s), brute, "closure mismatch at {s:?}");
        }
    }

    #[test]
    fn closure_is_idempotent_and_extensive() {
        for m in [u(2, 4), u(3, 3), example_2_4()] {
            for s in Subset::all(m.n()) {
                let c = m.closure(s);
                assert!(s.is_subset_of(c));
                assert_eq!(m.rank(c), m.rank(s));
                assert_eq!(m.closure(c), c);
            }
        }
    }

    #[test]
    fn flats_of_the_example_match_the_lattice_diagram() {
        let m = example_2_4();
        let lat = m.flats_lattice();
        assert_eq!(lat.flats_of_rank(0), &[Subset::EMPTY]);
        assert_eq!(
            lat.flats_of_rank(1),
            &[
                Subset::singleton(0),
                Subset::singleton(1),
                Subset::singleton(2),
                Subset::singleton(3)
            ]
        );
        assert_eq!(
            lat.flats_of_rank(2),
            &[
                Subset::from_elements([0, 1]),
                Subset::from_elements([0, 2]),
                Subset::from_elements([0, 3]),
                Subset::from_elements([1, 2, 3]),
            ]
        );
        assert_eq!(lat.flats_of_rank(3), &[Subset::full(4)]);
        // Flat condition: adding any outside element raises the rank by one.
        for (f, r) in lat.all() {
            if r < lat.top_rank() {
                for i in 0..m.n() {
                    if !f.contains(i) {
                        assert_eq!(m.rank(f.insert(i)), r + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn flats_by_brute_force_enumeration() {
        for m in [u(2, 4), u(3, 3), example_2_4()] {
            let lat = m.flats_lattice();
            let brute: BTreeSet<Subset> = Subset::all(m.n()).filter(|&s| m.is_flat(s)).collect();
            let listed: BTreeSet<Subset> = lat.all().map(|(f, _)| f).collect();
            assert_eq!(brute, listed);
            // Every rank-(r+1) flat covers at least one rank-r flat.
            for r in 1..=lat.top_rank() {
                for &f in lat.flats_of_rank(r) {
                    assert!(lat
                        .flats_of_rank(r - 1)
                        .iter()
                        .any(|&g| g.is_proper_subset_of(f)));
                }
            }
        }
    }

    #[test]
    fn u24_flats() {
        let lat = u(2, 4).flats_lattice();
        assert_eq!(lat.flats_of_rank(1).len(), 4);
        assert_eq!(lat.flats_of_rank(2), &[Subset::full(4)]);
    }

    #[test]
    fn u33_flats_are_all_subsets() {
        let lat = u(3, 3).flats_lattice();
        assert_eq!(lat.all().count(), 8);
    }

    #[test]
    fn loops_coloops_simple() {
        let m = example_2_4();
        assert!(m.loops().is_empty());
        assert_eq!(m.coloops(), Subset::singleton(0));
        assert!(m.is_simple());

        let u23 = u(2, 3);
        assert!(u23.loops().is_empty());
        assert!(u23.coloops().is_empty());
        assert!(u23.is_simple());

        // Matrix with a zero column: element 0 is a loop.
        let rows = vec![vec!["0".to_string(), "1".to_string()]];
        let with_loop = Matroid::build(&MatroidSpec::Matrix { rows }, None).unwrap();
        assert_eq!(with_loop.loops(), Subset::singleton(0));
        assert!(!with_loop.is_simple());
    }

    #[test]
    fn minors_of_the_example() {
        let m = example_2_4();
        let (del, _) = m.delete(3).unwrap();
        assert_eq!(del.full_rank(), 3);
        assert_eq!(del.n(), 3);
        // Deletion restricts the rank table.
        for s in Subset::all(3) {
            assert_eq!(del.rank(s), m.rank(s));
        }

        let (con, _) = m.contract(3).unwrap();
        assert_eq!(con.full_rank(), 2);
        let lat = con.flats_lattice();
        assert_eq!(
            lat.nonempty().map(|(f, _)| f).collect::<Vec<_>>(),
            vec![
                Subset::singleton(0),
                Subset::from_elements([1, 2]),
                Subset::from_elements([0, 1, 2])
            ]
        );

        let (c, _) = u(2, 3).contract(0).unwrap();
        assert_eq!(c.rank_table(), u(1, 2).rank_table());
    }

    #[test]
    fn minor_rank_formulas_exhaustively() {
        for m in [u(2, 4), example_2_4(), u(3, 3)] {
            for i in 0..m.n() {
                let (del, dmap) = m.delete(i).unwrap();
                let (con, cmap) = m.contract(i).unwrap();
                let ri = m.rank(Subset::singleton(i));
                for s in Subset::all(m.n() - 1) {
                    let p = dmap.to_parent(s);
                    assert_eq!(del.rank(s), m.rank(p));
                    let pc = cmap.to_parent(s);
                    assert_eq!(con.rank(s), m.rank(pc.insert(i)) - ri);
                }
            }
        }
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(
            u(2, 3).characteristic_polynomial(),
            IntPoly::new(vec![2, -3, 1])
        );
        assert_eq!(
            u(3, 3).characteristic_polynomial(),
            IntPoly::new(vec![-1, 3, -3, 1])
        );
        let rows = vec![vec!["0".to_string(), "1".to_string()]];
        let with_loop = Matroid::build(&MatroidSpec::Matrix { rows }, None).unwrap();
        assert!(with_loop.characteristic_polynomial().is_zero());
        assert_eq!(
            example_2_4().characteristic_polynomial(),
            IntPoly::new(vec![-2, 5, -4, 1])
        );
    }

    #[test]
    fn characteristic_polynomial_matches_whitney_sum() {
        // Independent oracle: chi(q) = sum over subsets (-1)^{|A|} q^{r(E)-r(A)}.
        for m in [u(2, 3), u(2, 4), u(3, 3), example_2_4()] {
            let top = m.full_rank();
            let mut coeffs = vec![0i64; top + 1];
            for s in Subset::all(m.n()) {
                let sign = if s.len() % 2 == 0 { 1 } else { -1 };
                coeffs[top - m.rank(s)] += sign;
            }
            assert_eq!(m.characteristic_polynomial(), IntPoly::new(coeffs));
        }
    }

    #[test]
    fn poly_display_and_reduction() {
        let chi = u(2, 3).characteristic_polynomial();
        assert_eq!(chi.to_string(), "q^2 - 3q + 2");
        assert_eq!(chi.div_q_minus_one().unwrap(), IntPoly::new(vec![-2, 1]));
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn graphic_triangle_is_u23() {
        let tri = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)], None).unwrap();
        assert_eq!(tri.rank_table(), u(2, 3).rank_table());
    }

    #[test]
    fn matrix_entries_parse_as_exact_rationals() {
        // (1/2, 0), (0, -3/7), (1/2, -3/7): three points on two generic
        // directions; same matroid as scaling the columns to integers.
        let rows = vec![
            vec!["1/2".to_string(), "0".to_string(), "1/2".to_string()],
            vec!["0".to_string(), "-3/7".to_string(), "-3/7".to_string()],
        ];
        let m = Matroid::build(&MatroidSpec::Matrix { rows }, None).unwrap();
        assert_eq!(m.rank_table(), u(2, 3).rank_table());
        let bad = vec![vec!["1/x".to_string()]];
        assert!(matches!(
            Matroid::build(&MatroidSpec::Matrix { rows: bad }, None),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn rank_lookup_range_check() {
        let m = u(2, 3);
        assert!(matches!(
            m.rank_of(Subset::from_elements([0, 5])),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn ground_set_bound_enforced() {
        assert_eq!(
            Matroid::uniform(2, 17, None),
            Err(Error::GroundSetTooLarge(17))
        );
    }
}
