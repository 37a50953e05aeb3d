//! Bergman fans and Minkowski weights: flag cones, balancing, divisors of
//! piecewise-linear functions, cap products against the Chow ring, and the
//! tropical-modification pullback of weights.
//!
//! The fan lives in the lattice quotient `Z^E / Z·e_E`, realized by dropping
//! the coordinate of the largest element; all evaluations are
//! lattice-intrinsic, so any fixed realization gives the same results.

use std::collections::BTreeMap;
use std::fmt;

use crate::chow::{ChainMonomial, ChowContext, ChowElement, Presentation};
use crate::error::{Error, Result};
use crate::linalg::{self, SolveOutcome};
use crate::matroid::{FlatLattice, Matroid};
use crate::subset::Subset;

/// A cone of the Bergman fan: a strictly increasing flag of proper nonempty
/// flats. The empty flag is the origin.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagCone {
    flats: Vec<Subset>,
}

impl FlagCone {
    pub fn origin() -> FlagCone {
        FlagCone { flats: Vec::new() }
    }

    pub fn new(flats: Vec<Subset>) -> Option<FlagCone> {
        if flats.windows(2).all(|w| w[0].is_proper_subset_of(w[1])) {
            Some(FlagCone { flats })
        } else {
            None
        }
    }

    pub fn dim(&self) -> usize {
        self.flats.len()
    }

    pub fn flats(&self) -> &[Subset] {
        &self.flats
    }

    /// Flags obtained by inserting one flat, paired with the inserted flat.
    fn extensions(&self, lattice: &FlatLattice) -> Vec<(FlagCone, Subset)> {
        let mut out = Vec::new();
        for (g, _) in lattice.proper_nonempty() {
            if self.flats.contains(&g) {
                continue;
            }
            let mut flats = self.flats.clone();
            let pos = flats.partition_point(|&f| f.bits() < g.bits());
            flats.insert(pos, g);
            if let Some(cone) = FlagCone::new(flats) {
                out.push((cone, g));
            }
        }
        out
    }
}

impl fmt::Display for FlagCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.flats.is_empty() {
            return write!(f, "<origin>");
        }
        let parts: Vec<String> = self.flats.iter().map(|s| s.label()).collect();
        write!(f, "{}", parts.join(" < "))
    }
}

/// Integer weight function on the dimension-k flag cones of a Bergman fan;
/// absent cones carry weight zero and zero weights are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinkowskiWeight {
    dim: usize,
    weights: BTreeMap<FlagCone, i64>,
}

impl MinkowskiWeight {
    pub fn zero(dim: usize) -> MinkowskiWeight {
        MinkowskiWeight {
            dim,
            weights: BTreeMap::new(),
        }
    }

    pub fn from_weights(
        dim: usize,
        it: impl IntoIterator<Item = (FlagCone, i64)>,
    ) -> MinkowskiWeight {
        let mut out = MinkowskiWeight::zero(dim);
        for (cone, w) in it {
            out.add(cone, w);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, cone: &FlagCone) -> i64 {
        self.weights.get(cone).copied().unwrap_or(0)
    }

    pub fn add(&mut self, cone: FlagCone, w: i64) {
        assert_eq!(cone.dim(), self.dim, "cone dimension mismatch");
        if w == 0 {
            return;
        }
        match self.weights.entry(cone) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(w);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().checked_add(w).expect("weight overflow");
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FlagCone, i64)> {
        self.weights.iter().map(|(c, &w)| (c, w))
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.weights.len()
    }

    pub fn plus(&self, other: &MinkowskiWeight) -> MinkowskiWeight {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (c, w) in other.iter() {
            out.add(c.clone(), w);
        }
        out
    }

    pub fn scale(&self, c: i64) -> MinkowskiWeight {
        MinkowskiWeight::from_weights(
            self.dim,
            self.iter()
                .map(|(cone, w)| (cone.clone(), w.checked_mul(c).expect("weight overflow"))),
        )
    }

    pub fn minus(&self, other: &MinkowskiWeight) -> MinkowskiWeight {
        self.plus(&other.scale(-1))
    }
}

/// A piecewise-linear function on a Bergman fan, determined by its integer
/// values on the rays `e_F` (proper nonempty flats) and extended linearly on
/// every cone.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PLFunction {
    values: BTreeMap<Subset, i64>,
}

impl PLFunction {
    pub fn zero() -> PLFunction {
        PLFunction::default()
    }

    /// The Courant function of a ray: 1 on `e_f`, 0 on all other rays.
    pub fn courant(f: Subset) -> PLFunction {
        PLFunction {
            values: BTreeMap::from([(f, 1)]),
        }
    }

    pub fn from_values(it: impl IntoIterator<Item = (Subset, i64)>) -> PLFunction {
        PLFunction {
            values: it.into_iter().filter(|&(_, v)| v != 0).collect(),
        }
    }

    pub fn value(&self, f: Subset) -> i64 {
        self.values.get(&f).copied().unwrap_or(0)
    }

    pub fn ray_values(&self) -> impl Iterator<Item = (Subset, i64)> + '_ {
        self.values.iter().map(|(&f, &v)| (f, v))
    }

    /// The PL data of a homogeneous degree-1 Chow class in the proper
    /// presentation: ray values are the generator coefficients.
    pub fn of_class(ctx: &ChowContext, class: &ChowElement) -> Result<PLFunction> {
        let class = ctx.to_proper(class);
        if class.homogeneous_degree() != Some(1) && !class.is_zero() {
            return Err(Error::WrongDegree {
                got: class.max_degree(),
                want: 1,
            });
        }
        let mut values = BTreeMap::new();
        for (m, c) in class.terms() {
            let [(f, 1)] = m.factors() else {
                return Err(Error::WrongDegree {
                    got: m.degree(),
                    want: 1,
                });
            };
            values.insert(*f, c);
        }
        Ok(PLFunction { values })
    }
}

/// Image of `e_F` in the quotient realization dropping the last coordinate.
pub fn ray_vector(n: usize, f: Subset) -> Vec<i64> {
    let last = f.contains(n - 1);
    (0..n - 1)
        .map(|j| i64::from(f.contains(j)) - i64::from(last))
        .collect()
}

/// All dimension-k flag cones of the Bergman fan of `m`.
pub fn bergman_cones(m: &Matroid, k: usize) -> Result<Vec<FlagCone>> {
    if m.has_loops() {
        return Err(Error::HasLoop);
    }
    Ok(flags_of_dim(&m.flats_lattice(), k))
}

/// All strictly increasing flags of proper nonempty flats of length `k`.
pub fn flags_of_dim(lattice: &FlatLattice, k: usize) -> Vec<FlagCone> {
    let mut out = vec![FlagCone::origin()];
    for _ in 0..k {
        let mut next = Vec::new();
        for cone in &out {
            for (g, _) in lattice.proper_nonempty() {
                if cone
                    .flats
                    .last()
                    .is_none_or(|&last| last.is_proper_subset_of(g))
                {
                    let mut flats = cone.flats.clone();
                    flats.push(g);
                    next.push(FlagCone { flats });
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// The fundamental weight: 1 on every top-dimensional flag cone.
pub fn one_top(m: &Matroid) -> Result<MinkowskiWeight> {
    if m.has_loops() {
        return Err(Error::HasLoop);
    }
    let lattice = m.flats_lattice();
    let d = m.full_rank() - 1;
    let w = MinkowskiWeight::from_weights(d, flags_of_dim(&lattice, d).into_iter().map(|c| (c, 1)));
    debug_assert!(balance_certificate(&lattice, &w).is_none());
    Ok(w)
}

/// Returns a failing codimension-one cone when the weight is not balanced,
/// `None` when it is. The weight must be supported on flag cones of the
/// given lattice.
pub fn balance_certificate(lattice: &FlatLattice, w: &MinkowskiWeight) -> Option<FlagCone> {
    let top = lattice.top();
    for (cone, _) in w.iter() {
        assert!(
            cone.flats()
                .iter()
                .all(|&f| !f.is_empty() && f != top && lattice.is_flat(f)),
            "weight supported outside the Bergman fan at {cone}"
        );
    }
    if w.dim() == 0 {
        return None;
    }
    let n = lattice.n();
    for tau in flags_of_dim(lattice, w.dim() - 1) {
        let mut s = vec![0i64; n - 1];
        let mut any = false;
        for (sigma, g) in tau.extensions(lattice) {
            let weight = w.get(&sigma);
            if weight != 0 {
                any = true;
                for (si, vi) in s.iter_mut().zip(ray_vector(n, g)) {
                    *si += weight * vi;
                }
            }
        }
        if !any {
            continue;
        }
        let cols: Vec<Vec<i64>> = tau.flats.iter().map(|&f| ray_vector(n, f)).collect();
        if matches!(linalg::solve_columns(&cols, &s), SolveOutcome::Inconsistent) {
            return Some(tau);
        }
    }
    None
}

pub fn is_balanced(lattice: &FlatLattice, w: &MinkowskiWeight) -> bool {
    balance_certificate(lattice, w).is_none()
}

/// Divisor of a piecewise-linear function against a balanced weight:
/// on each codimension-one cone τ,
/// `sum_σ w(σ) ψ(e_{G(σ,τ)}) - ψ(sum_σ w(σ) e_{G(σ,τ)})`,
/// with the second term evaluated by expressing the balanced sum in the
/// generators of τ.
pub fn courant_divisor(
    lattice: &FlatLattice,
    w: &MinkowskiWeight,
    psi: &PLFunction,
) -> Result<MinkowskiWeight> {
    assert!(
        w.dim() >= 1,
        "divisor needs a weight of dimension at least one"
    );
    if let Some(tau) = balance_certificate(lattice, w) {
        return Err(Error::UnbalancedInput(tau.to_string()));
    }
    let n = lattice.n();
    let mut out = MinkowskiWeight::zero(w.dim() - 1);
    for tau in flags_of_dim(lattice, w.dim() - 1) {
        let mut s = vec![0i64; n - 1];
        let mut first = 0i64;
        let mut any = false;
        for (sigma, g) in tau.extensions(lattice) {
            let weight = w.get(&sigma);
            if weight != 0 {
                any = true;
                first += weight * psi.value(g);
                for (si, vi) in s.iter_mut().zip(ray_vector(n, g)) {
                    *si += weight * vi;
                }
            }
        }
        if !any {
            continue;
        }
        let cols: Vec<Vec<i64>> = tau.flats.iter().map(|&f| ray_vector(n, f)).collect();
        let second = match linalg::solve_columns(&cols, &s) {
            SolveOutcome::Unique(coeffs) => {
                let mut acc = 0i64;
                for (c, &f) in coeffs.iter().zip(tau.flats.iter()) {
                    assert!(c.is_integer(), "non-integer cone coordinate");
                    let c = i64::try_from(c.to_integer()).expect("cone coordinate overflow");
                    acc += c * psi.value(f);
                }
                acc
            }
            SolveOutcome::Inconsistent => unreachable!("input weight verified balanced"),
            SolveOutcome::Underdetermined => {
                unreachable!("flag cone generators are linearly independent")
            }
        };
        out.add(tau, first - second);
    }
    assert!(
        balance_certificate(lattice, &out).is_none(),
        "divisor output failed balancing"
    );
    Ok(out)
}

/// Poincaré-duality cap: a homogeneous degree-j class becomes the weight
/// `σ ↦ deg(α · x_{F_1} ... x_{F_{d-j}})` on (d-j)-dimensional flag cones.
pub fn cap_by_degree(ctx: &ChowContext, alpha: &ChowElement) -> Result<MinkowskiWeight> {
    let alpha = ctx.to_proper(alpha);
    let d = ctx.top_degree();
    let Some(j) = alpha.homogeneous_degree() else {
        return Err(Error::WrongDegree {
            got: alpha.max_degree(),
            want: d,
        });
    };
    if j > d {
        return Err(Error::WrongDegree { got: j, want: d });
    }
    let dim = d - j;
    let mut out = MinkowskiWeight::zero(dim);
    for cone in flags_of_dim(ctx.lattice(), dim) {
        let mono =
            ChainMonomial::try_new(cone.flats().iter().map(|&f| (f, 1))).expect("flag is a chain");
        let prod = ctx.multiply(&alpha, &ChowElement::term(Presentation::Proper, mono, 1));
        let w = ctx.degree(&prod)?;
        out.add(cone, w);
    }
    assert!(
        balance_certificate(ctx.lattice(), &out).is_none(),
        "cap product failed balancing"
    );
    Ok(out)
}

/// The rational function of the modification `B(M) -> B(M\i)`: the projected
/// Courant data of the class `y_i`, with value `-1` on rays of flats that are
/// not flats of M but become flats with `i`, shifted by the linear functional
/// of the smallest minor element so the data descends to the projected fan.
pub fn phi_function(m: &Matroid, i: usize) -> Result<PLFunction> {
    if m.has_loops() {
        return Err(Error::HasLoop);
    }
    if i >= m.n() {
        return Err(Error::OutOfRange {
            element: i,
            n: m.n(),
        });
    }
    if m.is_coloop(i) {
        return Err(Error::IsColoop(i));
    }
    let (del, map) = m.delete(i)?;
    let lattice = del.flats_lattice();
    let mut values = BTreeMap::new();
    for (f, _) in lattice.proper_nonempty() {
        let parent = map.to_parent(f);
        let in_v = !m.is_flat(parent) && m.is_flat(parent.insert(i));
        let v = -i64::from(in_v) + i64::from(f.contains(0));
        if v != 0 {
            values.insert(f, v);
        }
    }
    Ok(PLFunction { values })
}

/// Pulls a balanced weight on `B(M\i)` back to `B(M)` along the
/// coordinate-forgetting projection. The pullback is the modification of the
/// input cycle along the rational function of the projection: graph cones
/// (canonical lifts of cones downstairs, taking `H` itself when `H` stays a
/// flat of M and `H + i` otherwise) copy the image weight, and the vertical
/// cones over the divisor of the function on the cycle carry the divisor
/// weights.
pub fn modification_pullback(
    m: &Matroid,
    i: usize,
    w: &MinkowskiWeight,
) -> Result<MinkowskiWeight> {
    if m.has_loops() {
        return Err(Error::HasLoop);
    }
    if m.is_coloop(i) {
        return Err(Error::IsColoop(i));
    }
    let (del, map) = m.delete(i)?;
    let del_lattice = del.flats_lattice();
    if let Some(tau) = balance_certificate(&del_lattice, w) {
        return Err(Error::UnbalancedInput(tau.to_string()));
    }
    let lattice = m.flats_lattice();
    let k = w.dim();
    let mut out = MinkowskiWeight::zero(k);

    // Graph part: lift each supporting cone member by member.
    for (rho, wv) in w.iter() {
        let flats: Vec<Subset> = rho
            .flats()
            .iter()
            .map(|&h| {
                let p = map.to_parent(h);
                if m.is_flat(p) {
                    p
                } else {
                    p.insert(i)
                }
            })
            .collect();
        let cone = FlagCone::new(flats).expect("graph lift of a flag stays a flag");
        out.add(cone, wv);
    }

    // Vertical part: the divisor of the modification's function on the input
    // cycle, placed on the flags subdividing each vertical cone. For an
    // element with a parallel partner the function is trivial as a class and
    // the divisor vanishes.
    if k >= 1 {
        let phi = phi_function(m, i)?;
        let div = courant_divisor(&del_lattice, w, &phi)?;
        let closure_i = m.closure(Subset::singleton(i));
        for (tau, d) in div.iter() {
            let parents: Vec<Subset> = tau.flats().iter().map(|&h| map.to_parent(h)).collect();
            if closure_i.len() > 1 || !parents.iter().all(|&p| m.is_flat(p.insert(i))) {
                // The vertical cone does not embed in the fan; the theory
                // says this weight cannot occur.
                return Err(Error::NoBalancedLift);
            }
            let prefix = parents.iter().take_while(|&&p| m.is_flat(p)).count();
            for pos in 0..=prefix {
                let mut members: Vec<Subset> = parents[..pos].to_vec();
                members.push(if pos == 0 {
                    closure_i
                } else {
                    parents[pos - 1].insert(i)
                });
                members.extend(parents[pos..].iter().map(|&p| p.insert(i)));
                let Some(cone) = FlagCone::new(members) else {
                    return Err(Error::NoBalancedLift);
                };
                out.add(cone, d);
            }
        }
    }

    assert!(
        balance_certificate(&lattice, &out).is_none(),
        "pullback output failed balancing"
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::MatroidSpec;

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n, None).unwrap()
    }

    fn example_2_4() -> Matroid {
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

    fn flag(flats: &[&[usize]]) -> FlagCone {
        FlagCone::new(
            flats
                .iter()
                .map(|els| Subset::from_elements(els.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn cone_counts() {
        assert_eq!(bergman_cones(&u(2, 3), 1).unwrap().len(), 3);
        assert_eq!(bergman_cones(&example_2_4(), 2).unwrap().len(), 9);
        assert_eq!(
            bergman_cones(&u(3, 3), 0).unwrap(),
            vec![FlagCone::origin()]
        );
        assert_eq!(bergman_cones(&u(3, 3), 2).unwrap().len(), 6);
    }

    #[test]
    fn loops_are_rejected() {
        let rows = vec![vec!["0".to_string(), "1".to_string()]];
        let with_loop = Matroid::build(&MatroidSpec::Matrix { rows }, None).unwrap();
        assert!(matches!(bergman_cones(&with_loop, 0), Err(Error::HasLoop)));
        assert!(matches!(one_top(&with_loop), Err(Error::HasLoop)));
    }

    #[test]
    fn fundamental_weights_are_balanced() {
        for m in [u(2, 3), u(2, 4), u(3, 3), example_2_4(), u(1, 1)] {
            let w = one_top(&m).unwrap();
            assert!(is_balanced(&m.flats_lattice(), &w));
            assert_eq!(w.dim(), m.full_rank() - 1);
        }
        assert_eq!(one_top(&u(2, 3)).unwrap().support_len(), 3);
        assert_eq!(one_top(&u(3, 3)).unwrap().support_len(), 6);
        assert_eq!(one_top(&example_2_4()).unwrap().support_len(), 9);
        assert_eq!(one_top(&u(1, 1)).unwrap().support_len(), 1);
    }

    #[test]
    fn unbalanced_weight_has_a_certificate() {
        let m = u(2, 3);
        let lattice = m.flats_lattice();
        let mut w = MinkowskiWeight::zero(1);
        w.add(flag(&[&[0]]), 1);
        w.add(flag(&[&[1]]), 1);
        let cert = balance_certificate(&lattice, &w);
        assert_eq!(cert, Some(FlagCone::origin()));
        assert!(!is_balanced(&lattice, &w));
    }

    #[test]
    fn courant_divisor_on_u23() {
        let m = u(2, 3);
        let lattice = m.flats_lattice();
        let ones = one_top(&m).unwrap();
        let div =
            courant_divisor(&lattice, &ones, &PLFunction::courant(Subset::singleton(0))).unwrap();
        assert_eq!(div.dim(), 0);
        assert_eq!(div.get(&FlagCone::origin()), 1);
        // Zero function gives the zero divisor.
        let z = courant_divisor(&lattice, &ones, &PLFunction::zero()).unwrap();
        assert!(z.is_zero());
        // Unbalanced input is reported.
        let mut bad = MinkowskiWeight::zero(1);
        bad.add(flag(&[&[0]]), 1);
        assert!(matches!(
            courant_divisor(&lattice, &bad, &PLFunction::zero()),
            Err(Error::UnbalancedInput(_))
        ));
    }

    #[test]
    fn courant_divisor_is_bilinear() {
        let m = example_2_4();
        let lattice = m.flats_lattice();
        let ones = one_top(&m).unwrap();
        let twos = ones.scale(2);
        let psi1 = PLFunction::courant(Subset::singleton(0));
        let psi2 = PLFunction::courant(Subset::from_elements([1, 2, 3]));
        // combined = psi1 + 3 psi2, combined ray by ray.
        let mut acc: BTreeMap<Subset, i64> = BTreeMap::new();
        for (f, v) in psi1
            .ray_values()
            .chain(psi2.ray_values().map(|(f, v)| (f, 3 * v)))
        {
            *acc.entry(f).or_insert(0) += v;
        }
        let combined = PLFunction::from_values(acc);
        let d1 = courant_divisor(&lattice, &ones, &psi1).unwrap();
        let d2 = courant_divisor(&lattice, &ones, &psi2).unwrap();
        let dsum = courant_divisor(&lattice, &ones, &combined).unwrap();
        assert_eq!(dsum, d1.plus(&d2.scale(3)));
        let dtwice = courant_divisor(&lattice, &twos, &psi1).unwrap();
        assert_eq!(dtwice, d1.scale(2));
    }

    #[test]
    fn cap_of_one_is_the_fundamental_weight() {
        for m in [u(2, 3), u(3, 3), example_2_4()] {
            let ctx = ChowContext::new(&m).unwrap();
            let capped = cap_by_degree(&ctx, &ChowElement::one(Presentation::Proper)).unwrap();
            assert_eq!(capped, one_top(&m).unwrap());
        }
    }

    #[test]
    fn cap_of_x0_in_the_example() {
        let ctx = ChowContext::new(&example_2_4()).unwrap();
        let x0 = ChowElement::variable(Presentation::Proper, Subset::singleton(0));
        let capped = cap_by_degree(&ctx, &x0).unwrap();
        assert_eq!(capped.dim(), 1);
        // deg(x_0 x_F): -2 on the ray {0}, +1 on rays {01},{02},{03}, 0 else.
        assert_eq!(capped.get(&flag(&[&[0]])), -2);
        for pair in [[0usize, 1], [0, 2], [0, 3]] {
            assert_eq!(capped.get(&flag(&[&pair])), 1);
        }
        for other in [
            flag(&[&[1]]),
            flag(&[&[2]]),
            flag(&[&[3]]),
            flag(&[&[1, 2, 3]]),
        ] {
            assert_eq!(capped.get(&other), 0);
        }
    }

    #[test]
    fn phi_values_on_the_example() {
        // For M = example-2.4 and i = 3 the deleted-minor fan keeps labels
        // 0,1,2; phi is the projected Courant data of y_3.
        let phi = phi_function(&example_2_4(), 3).unwrap();
        assert_eq!(phi.value(Subset::singleton(0)), 1);
        assert_eq!(phi.value(Subset::singleton(1)), 0);
        assert_eq!(phi.value(Subset::singleton(2)), 0);
        assert_eq!(phi.value(Subset::from_elements([0, 1])), 1);
        assert_eq!(phi.value(Subset::from_elements([0, 2])), 1);
        assert_eq!(phi.value(Subset::from_elements([1, 2])), -1);
        // Coloop input is rejected.
        assert!(matches!(
            phi_function(&example_2_4(), 0),
            Err(Error::IsColoop(0))
        ));
    }

    #[test]
    fn phi_divisor_is_the_contraction_fan() {
        // div_{B(M\i)}(phi) carries weight 1 exactly on the flag cones of
        // B(M/i) and 0 elsewhere.
        for (m, i) in [(example_2_4(), 3), (u(2, 3), 0), (u(2, 4), 2)] {
            let phi = phi_function(&m, i).unwrap();
            let (del, delmap) = m.delete(i).unwrap();
            let (con, conmap) = m.contract(i).unwrap();
            let lattice = del.flats_lattice();
            let div = courant_divisor(&lattice, &one_top(&del).unwrap(), &phi).unwrap();
            assert_eq!(conmap.removed(), delmap.removed());
            let expected: MinkowskiWeight = if con.has_loops() {
                MinkowskiWeight::zero(div.dim())
            } else {
                MinkowskiWeight::from_weights(
                    div.dim(),
                    flags_of_dim(&con.flats_lattice(), div.dim())
                        .into_iter()
                        .map(|c| (c, 1)),
                )
            };
            assert_eq!(div, expected, "matroid {m:?}, element {i}");
        }
    }

    #[test]
    fn pullback_of_the_fundamental_weight() {
        let m = example_2_4();
        let (del, _) = m.delete(3).unwrap();
        let lifted = modification_pullback(&m, 3, &one_top(&del).unwrap()).unwrap();
        assert_eq!(lifted, one_top(&m).unwrap());
        // Zero pulls back to zero.
        let z = modification_pullback(&m, 3, &MinkowskiWeight::zero(2)).unwrap();
        assert!(z.is_zero());
        let z0 = modification_pullback(&u(2, 3), 0, &MinkowskiWeight::zero(0)).unwrap();
        assert!(z0.is_zero());
    }

    #[test]
    fn ray_vectors_quotient_out_the_ground_set() {
        assert_eq!(ray_vector(3, Subset::full(3)), vec![0, 0]);
        assert_eq!(ray_vector(3, Subset::singleton(0)), vec![1, 0]);
        assert_eq!(ray_vector(3, Subset::singleton(2)), vec![-1, -1]);
        assert!(ray_vector(1, Subset::singleton(0)).is_empty());
    }
}
