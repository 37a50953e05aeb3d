//! The Chow ring of a matroid: chain-supported monomials in flat generators,
//! canonical integer normal forms, multiplication, the degree map, and the
//! Poincaré-duality pairing.
//!
//! Normal forms come from exact integer linear algebra: per degree, the
//! relation lattice spanned by the linear generators times chain monomials is
//! annihilated by a saturated lattice of integer functionals; coordinates in
//! those functionals, rewritten in a chosen unimodular monomial basis, give a
//! reduction map that is the source of truth for all equality tests.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, SolveOutcome};
use crate::matroid::{FlatLattice, Matroid};
use crate::subset::Subset;

/// Which generator set a [`ChowElement`] is written in: the proper nonempty
/// flats, or all nonempty flats including the ground set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    Proper,
    AllFlats,
}

/// A monomial `x_{F_1}^{e_1} ... x_{F_k}^{e_k}` whose supporting flats form a
/// chain. Monomials with incomparable support are identified with zero and
/// cannot be constructed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainMonomial {
    /// Sorted by bitset value, which on a chain is inclusion order.
    factors: Vec<(Subset, u32)>,
}

impl ChainMonomial {
    pub fn one() -> ChainMonomial {
        ChainMonomial {
            factors: Vec::new(),
        }
    }

    pub fn variable(f: Subset) -> ChainMonomial {
        ChainMonomial {
            factors: vec![(f, 1)],
        }
    }

    /// Builds a monomial from factor pairs, returning `None` when the support
    /// is not a chain (the monomial is zero in the ring).
    pub fn try_new(factors: impl IntoIterator<Item = (Subset, u32)>) -> Option<ChainMonomial> {
        let mut map: BTreeMap<Subset, u32> = BTreeMap::new();
        for (f, e) in factors {
            if e > 0 {
                *map.entry(f).or_insert(0) += e;
            }
        }
        let factors: Vec<(Subset, u32)> = map.into_iter().collect();
        for w in factors.windows(2) {
            if !w[0].0.is_subset_of(w[1].0) {
                return None;
            }
        }
        Some(ChainMonomial { factors })
    }

    pub fn factors(&self) -> &[(Subset, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &ChainMonomial) -> Option<ChainMonomial> {
        ChainMonomial::try_new(self.factors.iter().chain(other.factors.iter()).copied())
    }

    pub fn support(&self) -> impl Iterator<Item = Subset> + '_ {
        self.factors.iter().map(|&(f, _)| f)
    }

    /// The flats listed with multiplicity, smallest first (a multiset chain
    /// `F_{r_1} ⊆ ... ⊆ F_{r_k}`).
    pub fn expanded(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        for &(f, e) in &self.factors {
            for _ in 0..e {
                out.push(f);
            }
        }
        out
    }
}

impl fmt::Display for ChainMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(s, e) in &self.factors {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "x_{{{}}}", s.label())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// An integer linear combination of chain monomials in one presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowElement {
    pres: Presentation,
    terms: BTreeMap<ChainMonomial, i64>,
}

fn add_coeff(map: &mut BTreeMap<ChainMonomial, i64>, m: ChainMonomial, c: i64) {
    if c == 0 {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = e.get().checked_add(c).expect("coefficient overflow");
            if v == 0 {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

impl ChowElement {
    pub fn zero(pres: Presentation) -> ChowElement {
        ChowElement {
            pres,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(pres: Presentation) -> ChowElement {
        ChowElement::term(pres, ChainMonomial::one(), 1)
    }

    pub fn variable(pres: Presentation, f: Subset) -> ChowElement {
        ChowElement::term(pres, ChainMonomial::variable(f), 1)
    }

    pub fn term(pres: Presentation, m: ChainMonomial, c: i64) -> ChowElement {
        let mut terms = BTreeMap::new();
        add_coeff(&mut terms, m, c);
        ChowElement { pres, terms }
    }

    pub fn from_terms(
        pres: Presentation,
        it: impl IntoIterator<Item = (ChainMonomial, i64)>,
    ) -> ChowElement {
        let mut terms = BTreeMap::new();
        for (m, c) in it {
            add_coeff(&mut terms, m, c);
        }
        ChowElement { pres, terms }
    }

    pub fn presentation(&self) -> Presentation {
        self.pres
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ChainMonomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &ChainMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &ChowElement) -> ChowElement {
        assert_eq!(self.pres, other.pres, "presentation mismatch in add");
        let mut terms = self.terms.clone();
        for (m, &c) in &other.terms {
            add_coeff(&mut terms, m.clone(), c);
        }
        ChowElement {
            pres: self.pres,
            terms,
        }
    }

    pub fn neg(&self) -> ChowElement {
        self.scale(-1)
    }

    pub fn sub(&self, other: &ChowElement) -> ChowElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: i64) -> ChowElement {
        if c == 0 {
            return ChowElement::zero(self.pres);
        }
        ChowElement {
            pres: self.pres,
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.clone(), v.checked_mul(c).expect("coefficient overflow")))
                .collect(),
        }
    }

    /// Product with chain truncation (incomparable supports vanish) and an
    /// optional degree cap above which terms are dropped.
    pub fn mul(&self, other: &ChowElement, cap: Option<usize>) -> ChowElement {
        assert_eq!(self.pres, other.pres, "presentation mismatch in mul");
        let mut terms = BTreeMap::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                if let Some(cap) = cap {
                    if ma.degree() + mb.degree() > cap {
                        continue;
                    }
                }
                if let Some(m) = ma.mul(mb) {
                    add_coeff(
                        &mut terms,
                        m,
                        ca.checked_mul(cb).expect("coefficient overflow"),
                    );
                }
            }
        }
        ChowElement {
            pres: self.pres,
            terms,
        }
    }

    pub fn graded_piece(&self, k: usize) -> ChowElement {
        ChowElement {
            pres: self.pres,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// The degree when homogeneous; `None` for genuinely mixed elements. The
    /// zero element counts as homogeneous of degree zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let Some(first) = it.next() else {
            return Some(0);
        };
        it.all(|d| d == first).then_some(first)
    }

    fn with_presentation(&self, pres: Presentation) -> ChowElement {
        ChowElement {
            pres,
            terms: self.terms.clone(),
        }
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut items: Vec<(&ChainMonomial, i64)> =
            self.terms.iter().map(|(m, &c)| (m, c)).collect();
        items.sort_by_key(|(m, _)| (m.degree(), (*m).clone()));
        let mut first = true;
        for (m, c) in items {
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
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag} ")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

struct DegreeData {
    monomials: Vec<ChainMonomial>,
    index: BTreeMap<ChainMonomial, usize>,
    /// Rows express the quotient coordinates of each monomial column in the
    /// chosen monomial basis.
    reduction: Vec<Vec<i64>>,
    /// Indices (into `monomials`) of the chosen basis monomials.
    basis: Vec<usize>,
}

/// Per-matroid Chow ring data: graded chain monomials, normal-form reduction
/// maps, bases, and the degree functional. Immutable once built.
pub struct ChowContext {
    matroid: Matroid,
    lattice: FlatLattice,
    top_degree: usize,
    degrees: Vec<DegreeData>,
    /// Reduction coordinate shared by every maximal flag monomial in the top
    /// degree; `degree` divides by it so flags map to +1.
    flag_sign: i64,
}

impl ChowContext {
    pub fn new(matroid: &Matroid) -> Result<ChowContext> {
        if matroid.has_loops() {
            return Err(Error::HasLoop);
        }
        if matroid.full_rank() == 0 {
            return Err(Error::RankZero);
        }
        let lattice = matroid.flats_lattice();
        let top_degree = matroid.full_rank() - 1;
        let mut proper: Vec<Subset> = lattice.proper_nonempty().map(|(f, _)| f).collect();
        proper.sort();

        let mut degrees: Vec<DegreeData> = Vec::with_capacity(top_degree + 1);
        for k in 0..=top_degree {
            let monomials = chain_monomials(&proper, k);
            let index: BTreeMap<ChainMonomial, usize> = monomials
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect();
            let m = monomials.len();
            // Relation rows: the J generator for the pair (0, j), times every
            // chain monomial of degree k-1, projected onto chain monomials.
            let mut relations: Vec<Vec<i64>> = Vec::new();
            if k > 0 {
                for prev in &degrees[k - 1].monomials {
                    for j in 1..matroid.n() {
                        let mut row = vec![0i64; m];
                        let mut nonzero = false;
                        for &f in &proper {
                            let c = i64::from(f.contains(0)) - i64::from(f.contains(j));
                            if c == 0 {
                                continue;
                            }
                            if let Some(prod) = prev.mul(&ChainMonomial::variable(f)) {
                                row[index[&prod]] += c;
                                nonzero = true;
                            }
                        }
                        if nonzero {
                            relations.push(row);
                        }
                    }
                }
            }
            let functionals: Vec<Vec<i64>> = linalg::integer_kernel(&relations, m)
                .into_iter()
                .map(|v| {
                    v.into_iter()
                        .map(|x| i64::try_from(x).expect("functional entry overflow"))
                        .collect()
                })
                .collect();
            let s = functionals.len();
            let basis = choose_unimodular_basis(&functionals, m, s);
            let reduction = reduction_matrix(&functionals, &basis);
            degrees.push(DegreeData {
                monomials,
                index,
                reduction,
                basis,
            });
        }

        let top = &degrees[top_degree];
        assert_eq!(top.basis.len(), 1, "top graded piece must have rank one");
        // All maximal flag monomials must share one reduction coordinate of
        // absolute value one; the degree map then rescales it to +1.
        let mut flag_sign = None;
        for flag in maximal_flags(&lattice) {
            let mono =
                ChainMonomial::try_new(flag.iter().map(|&f| (f, 1))).expect("flag is a chain");
            let idx = top.index[&mono];
            let c = top.reduction[0][idx];
            match flag_sign {
                None => flag_sign = Some(c),
                Some(prev) => assert_eq!(
                    prev, c,
                    "maximal flag monomials disagree in the top graded piece"
                ),
            }
        }
        let flag_sign = flag_sign.expect("at least one maximal flag");
        assert_eq!(
            flag_sign.abs(),
            1,
            "flag monomial does not generate the top piece"
        );

        Ok(ChowContext {
            matroid: matroid.clone(),
            lattice,
            top_degree,
            degrees,
            flag_sign,
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn lattice(&self) -> &FlatLattice {
        &self.lattice
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn graded_ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.basis.len()).collect()
    }

    pub fn chain_monomials(&self, k: usize) -> &[ChainMonomial] {
        &self.degrees[k].monomials
    }

    pub fn basis(&self, k: usize) -> Vec<ChainMonomial> {
        let d = &self.degrees[k];
        d.basis.iter().map(|&i| d.monomials[i].clone()).collect()
    }

    /// Ring product truncated to the top degree (higher graded pieces vanish).
    pub fn multiply(&self, a: &ChowElement, b: &ChowElement) -> ChowElement {
        a.mul(b, Some(self.top_degree))
    }

    /// Ring product that reports rather than truncates degree overflow.
    pub fn multiply_strict(&self, a: &ChowElement, b: &ChowElement) -> Result<ChowElement> {
        let full = a.mul(b, None);
        if full.max_degree() > self.top_degree {
            return Err(Error::DegreeOverflow {
                degree: full.max_degree(),
                top: self.top_degree,
            });
        }
        Ok(full)
    }

    /// View in the all-nonempty-flats presentation (pure relabeling; the
    /// proper generators are a subset of the all-flats generators).
    pub fn to_all_flats(&self, a: &ChowElement) -> ChowElement {
        match a.presentation() {
            Presentation::AllFlats => a.clone(),
            Presentation::Proper => a.with_presentation(Presentation::AllFlats),
        }
    }

    /// Substitutes `x_E = -sum_{F ∋ 0, F proper} x_F` to land in the proper
    /// presentation. Any fixed element gives relation-equivalent output; the
    /// smallest one is used.
    pub fn to_proper(&self, a: &ChowElement) -> ChowElement {
        if a.presentation() == Presentation::Proper {
            return a.clone();
        }
        let e = self.lattice.top();
        let subst = ChowElement::from_terms(
            Presentation::Proper,
            self.lattice
                .proper_nonempty()
                .filter(|(f, _)| f.contains(0))
                .map(|(f, _)| (ChainMonomial::variable(f), -1i64)),
        );
        let mut out = ChowElement::zero(Presentation::Proper);
        for (m, c) in a.terms() {
            let mut e_exp = 0;
            let rest: Vec<(Subset, u32)> = m
                .factors()
                .iter()
                .filter_map(|&(f, x)| {
                    if f == e {
                        e_exp = x;
                        None
                    } else {
                        Some((f, x))
                    }
                })
                .collect();
            let base = ChainMonomial::try_new(rest).expect("subchain of a chain");
            let mut piece = ChowElement::term(Presentation::Proper, base, c);
            for _ in 0..e_exp {
                piece = piece.mul(&subst, None);
            }
            out = out.add(&piece);
        }
        out
    }

    /// Canonical normal form: coordinates in the chosen monomial basis,
    /// degree by degree. Graded pieces above the top degree vanish.
    pub fn normalize(&self, a: &ChowElement) -> ChowElement {
        let a = self.to_proper(a);
        let mut out = ChowElement::zero(Presentation::Proper);
        for k in 0..=self.top_degree.min(a.max_degree()) {
            let data = &self.degrees[k];
            let piece = a.graded_piece(k);
            if piece.is_zero() {
                continue;
            }
            let mut v = vec![0i128; data.monomials.len()];
            for (m, c) in piece.terms() {
                let idx = *data.index.get(m).unwrap_or_else(|| {
                    panic!("monomial {m} is not over this matroid's proper flats")
                });
                v[idx] = c as i128;
            }
            for (row, &bidx) in data.reduction.iter().zip(data.basis.iter()) {
                let coord: i128 = row.iter().zip(v.iter()).map(|(&r, &x)| r as i128 * x).sum();
                let coord = i64::try_from(coord).expect("normal form coefficient overflow");
                if coord != 0 {
                    out = out.add(&ChowElement::term(
                        Presentation::Proper,
                        data.monomials[bidx].clone(),
                        coord,
                    ));
                }
            }
        }
        out
    }

    /// Normal-form equality modulo the ideal.
    pub fn equivalent(&self, a: &ChowElement, b: &ChowElement) -> bool {
        self.normalize(a) == self.normalize(b)
    }

    /// Degree map on the top graded piece, normalized so that every maximal
    /// flag monomial of proper flats has degree +1.
    pub fn degree(&self, a: &ChowElement) -> Result<i64> {
        let a = self.to_proper(a);
        match a.homogeneous_degree() {
            Some(k) if a.is_zero() || k == self.top_degree => {}
            Some(k) => {
                return Err(Error::WrongDegree {
                    got: k,
                    want: self.top_degree,
                })
            }
            None => {
                return Err(Error::WrongDegree {
                    got: a.max_degree(),
                    want: self.top_degree,
                })
            }
        }
        if a.is_zero() {
            return Ok(0);
        }
        let nrm = self.normalize(&a);
        let data = &self.degrees[self.top_degree];
        let coord = nrm.coeff(&data.monomials[data.basis[0]]);
        Ok(coord * self.flag_sign)
    }

    /// The matrix `[deg(b_i * c_j)]` over the chosen bases of the k-th and
    /// (d-k)-th graded pieces.
    pub fn pairing_matrix(&self, k: usize) -> Result<Vec<Vec<i64>>> {
        if k > self.top_degree {
            return Err(Error::WrongDegree {
                got: k,
                want: self.top_degree,
            });
        }
        let rows = self.basis(k);
        let cols = self.basis(self.top_degree - k);
        rows.iter()
            .map(|b| {
                cols.iter()
                    .map(|c| {
                        let prod = self.multiply(
                            &ChowElement::term(Presentation::Proper, b.clone(), 1),
                            &ChowElement::term(Presentation::Proper, c.clone(), 1),
                        );
                        self.degree(&prod)
                    })
                    .collect()
            })
            .collect()
    }

    /// Kills every generator outside the given maximal flag; no ideal
    /// reduction is applied. The flag must be a full chain `F_1 ⊊ ... ⊊
    /// F_{rk(E)} = E` with `rk(F_i) = i`.
    pub fn restrict_to_flag(&self, a: &ChowElement, flag: &[Subset]) -> Result<ChowElement> {
        let rk = self.top_degree + 1;
        if flag.len() != rk {
            return Err(Error::FlagNotMaximal(format!(
                "flag has length {}, expected {rk}",
                flag.len()
            )));
        }
        for (i, &f) in flag.iter().enumerate() {
            if self.lattice.rank_of_flat(f) != Some(i + 1) {
                return Err(Error::FlagNotMaximal(format!(
                    "member {f:?} is not a flat of rank {}",
                    i + 1
                )));
            }
            if i + 1 < flag.len() && !f.is_proper_subset_of(flag[i + 1]) {
                return Err(Error::FlagNotMaximal(format!(
                    "members {f:?} and {:?} are not strictly nested",
                    flag[i + 1]
                )));
            }
        }
        if flag[rk - 1] != self.lattice.top() {
            return Err(Error::FlagNotMaximal(
                "flag does not end at the ground set".into(),
            ));
        }
        Ok(ChowElement::from_terms(
            a.presentation(),
            a.terms()
                .filter(|(m, _)| m.support().all(|f| flag.contains(&f)))
                .map(|(m, c)| (m.clone(), c)),
        ))
    }

    /// All maximal flags of proper nonempty flats.
    pub fn maximal_proper_flags(&self) -> Vec<Vec<Subset>> {
        maximal_flags(&self.lattice)
    }
}

/// All weak chains of the given (sorted) flats with exponents summing to `k`,
/// in canonical order.
pub(crate) fn chain_monomials(sorted_flats: &[Subset], k: usize) -> Vec<ChainMonomial> {
    fn go(
        flats: &[Subset],
        start: usize,
        remaining: usize,
        stack: &mut Vec<(Subset, u32)>,
        out: &mut Vec<ChainMonomial>,
    ) {
        if remaining == 0 {
            out.push(ChainMonomial {
                factors: stack.clone(),
            });
            return;
        }
        for idx in start..flats.len() {
            let f = flats[idx];
            if let Some(&(last, _)) = stack.last() {
                if !last.is_proper_subset_of(f) {
                    continue;
                }
            }
            for e in 1..=remaining as u32 {
                stack.push((f, e));
                go(flats, idx + 1, remaining - e as usize, stack, out);
                stack.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    go(sorted_flats, 0, k, &mut stack, &mut out);
    out.sort();
    out
}

/// All maximal flags of proper nonempty flats (rank i at position i-1).
fn maximal_flags(lattice: &FlatLattice) -> Vec<Vec<Subset>> {
    let d = lattice.top_rank() - 1;
    let mut out: Vec<Vec<Subset>> = vec![Vec::new()];
    for r in 1..=d {
        let mut next = Vec::new();
        for flag in &out {
            for &f in lattice.flats_of_rank(r) {
                if flag.last().is_none_or(|&last| last.is_proper_subset_of(f)) {
                    let mut ext = flag.clone();
                    ext.push(f);
                    next.push(ext);
                }
            }
        }
        out = next;
    }
    out
}

/// Greedily selects monomial columns whose functional coordinates form a
/// unimodular square matrix, repairing by swaps when the greedy choice has
/// determinant of absolute value above one.
fn choose_unimodular_basis(functionals: &[Vec<i64>], m: usize, s: usize) -> Vec<usize> {
    if s == 0 {
        return Vec::new();
    }
    let column = |j: usize| -> Vec<i64> { functionals.iter().map(|row| row[j]).collect() };
    let mut selected: Vec<usize> = Vec::new();
    for j in 0..m {
        if selected.len() == s {
            break;
        }
        let mut cols: Vec<Vec<i64>> = selected.iter().map(|&i| column(i)).collect();
        cols.push(column(j));
        let rows: Vec<Vec<i64>> = (0..s)
            .map(|r| cols.iter().map(|c| c[r]).collect())
            .collect();
        if linalg::i64_rank(&rows) == cols.len() {
            selected.push(j);
        }
    }
    assert_eq!(
        selected.len(),
        s,
        "monomial classes do not span the graded piece"
    );
    let det_of = |sel: &[usize]| -> num_bigint::BigInt {
        let rows: Vec<Vec<i64>> = (0..s)
            .map(|r| sel.iter().map(|&j| functionals[r][j]).collect())
            .collect();
        linalg::determinant(&rows)
    };
    let mut det = det_of(&selected).abs();
    let one = num_bigint::BigInt::from(1);
    while det > one {
        let mut improved = false;
        'outer: for pos in 0..s {
            for j in 0..m {
                if selected.contains(&j) {
                    continue;
                }
                let mut cand = selected.clone();
                cand[pos] = j;
                let d = det_of(&cand).abs();
                if !d.is_zero() && d < det {
                    selected = cand;
                    det = d;
                    improved = true;
                    break 'outer;
                }
            }
        }
        assert!(improved, "no unimodular monomial basis found (index {det})");
    }
    selected.sort_unstable();
    selected
}

/// Solves `B x = F[:, j]` for every monomial column, giving the integer
/// reduction matrix in the chosen basis.
fn reduction_matrix(functionals: &[Vec<i64>], basis: &[usize]) -> Vec<Vec<i64>> {
    let s = functionals.len();
    if s == 0 {
        return Vec::new();
    }
    let m = functionals[0].len();
    let bcols: Vec<Vec<i64>> = basis
        .iter()
        .map(|&j| functionals.iter().map(|row| row[j]).collect())
        .collect();
    let mut rows = vec![vec![0i64; m]; s];
    for j in 0..m {
        let target: Vec<i64> = functionals.iter().map(|row| row[j]).collect();
        match linalg::solve_columns(&bcols, &target) {
            SolveOutcome::Unique(x) => {
                for (i, xi) in x.iter().enumerate() {
                    assert!(xi.is_integer(), "non-integer reduction coordinate");
                    rows[i][j] = i64::try_from(xi.to_integer()).expect("reduction entry overflow");
                }
            }
            other => panic!("basis solve failed: {other:?}"),
        }
    }
    rows
}
