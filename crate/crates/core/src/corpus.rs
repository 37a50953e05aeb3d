//! Builtin matroid corpus: the worked example, small uniforms, graphic and
//! projective-plane classics, plus degenerate cases (loop, isthmus, parallel
//! elements). Ships inside the library so verification runs need no data
//! files.

use crate::chow::{ChainMonomial, ChowElement, Presentation};
use crate::error::Result;
use crate::fan::{FlagCone, MinkowskiWeight};
use crate::matroid::{Matroid, MatroidSpec};
use crate::subset::Subset;

/// How an expected value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Paper => "paper",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        }
    }
}

/// Frozen expected values for a corpus entry; every value carries its
/// provenance.
#[derive(Debug, Clone, Default)]
pub struct Expected {
    pub graded_ranks: Option<(Vec<usize>, Provenance)>,
    /// Class whose normal form must equal the normal form of the staircase.
    pub staircase: Option<(ChowElement, Provenance)>,
    /// CSM weights indexed by dimension.
    pub csm: Option<(Vec<MinkowskiWeight>, Provenance)>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: MatroidSpec,
    pub expected: Expected,
}

impl CorpusEntry {
    pub fn matroid(&self) -> Result<Matroid> {
        Matroid::build(&self.spec, Some(self.name.clone()))
    }
}

fn matrix_spec(rows: &[&[i64]]) -> MatroidSpec {
    MatroidSpec::Matrix {
        rows: rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect(),
    }
}

fn elem(pres: Presentation, terms: &[(&[usize], i64)]) -> ChowElement {
    ChowElement::from_terms(
        pres,
        terms.iter().map(|&(els, c)| {
            let m = if els.is_empty() {
                ChainMonomial::one()
            } else {
                ChainMonomial::variable(Subset::from_elements(els.iter().copied()))
            };
            (m, c)
        }),
    )
}

fn weight(dim: usize, cones: &[(&[&[usize]], i64)]) -> MinkowskiWeight {
    MinkowskiWeight::from_weights(
        dim,
        cones.iter().map(|&(flats, w)| {
            let cone = FlagCone::new(
                flats
                    .iter()
                    .map(|els| Subset::from_elements(els.iter().copied()))
                    .collect(),
            )
            .expect("corpus cone is a flag");
            (cone, w)
        }),
    )
}

/// The seven lines of the Fano plane under the GF(2) labeling: {a,b,c} is a
/// line exactly when (a+1) xor (b+1) xor (c+1) = 0.
fn fano_bases() -> Vec<Vec<usize>> {
    let mut bases = Vec::new();
    for a in 0..7usize {
        for b in a + 1..7 {
            for c in b + 1..7 {
                if (a + 1) ^ (b + 1) ^ (c + 1) != 0 {
                    bases.push(vec![a, b, c]);
                }
            }
        }
    }
    bases
}

/// The builtin corpus, in canonical order.
#[allow(clippy::vec_init_then_push)]
pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let p = Presentation::Proper;
    let mut entries = Vec::new();

    entries.push(CorpusEntry {
        name: "u11".into(),
        spec: MatroidSpec::Uniform { r: 1, n: 1 },
        expected: Expected {
            graded_ranks: Some((vec![1], Provenance::Trivial)),
            staircase: Some((elem(p, &[(&[], 1)]), Provenance::Derived)),
            // The isthmus: csm(M_1) = 1_{M_1}, a single origin cone of weight 1.
            csm: Some((vec![weight(0, &[(&[], 1)])], Provenance::Paper)),
        },
    });

    entries.push(CorpusEntry {
        name: "loop".into(),
        // One zero column and one independent column: element 0 is a loop.
        spec: matrix_spec(&[&[0, 1]]),
        expected: Expected {
            graded_ranks: None,
            staircase: None,
            csm: Some((vec![MinkowskiWeight::zero(0)], Provenance::Paper)),
        },
    });

    entries.push(CorpusEntry {
        name: "u23".into(),
        spec: MatroidSpec::Uniform { r: 2, n: 3 },
        expected: Expected {
            graded_ranks: Some((vec![1, 1], Provenance::Derived)),
            staircase: Some((elem(p, &[(&[], 1), (&[0], -1)]), Provenance::Derived)),
            csm: Some((
                vec![
                    weight(0, &[(&[], -1)]),
                    weight(1, &[(&[&[0]], 1), (&[&[1]], 1), (&[&[2]], 1)]),
                ],
                Provenance::Derived,
            )),
        },
    });

    entries.push(CorpusEntry {
        name: "u24".into(),
        spec: MatroidSpec::Uniform { r: 2, n: 4 },
        expected: Expected {
            graded_ranks: Some((vec![1, 1], Provenance::Derived)),
            staircase: Some((elem(p, &[(&[], 1), (&[0], -2)]), Provenance::Derived)),
            csm: None,
        },
    });

    entries.push(CorpusEntry {
        name: "u33".into(),
        spec: MatroidSpec::Uniform { r: 3, n: 3 },
        expected: Expected {
            graded_ranks: Some((vec![1, 4, 1], Provenance::Derived)),
            staircase: None,
            // Both lower weights vanish: every one-step minor of the free
            // matroid is free again and the beta invariants are zero.
            csm: Some((
                vec![
                    MinkowskiWeight::zero(0),
                    MinkowskiWeight::zero(1),
                    weight(
                        2,
                        &[
                            (&[&[0], &[0, 1]], 1),
                            (&[&[0], &[0, 2]], 1),
                            (&[&[1], &[0, 1]], 1),
                            (&[&[1], &[1, 2]], 1),
                            (&[&[2], &[0, 2]], 1),
                            (&[&[2], &[1, 2]], 1),
                        ],
                    ),
                ],
                Provenance::Derived,
            )),
        },
    });

    entries.push(CorpusEntry {
        name: "u34".into(),
        spec: MatroidSpec::Uniform { r: 3, n: 4 },
        expected: Expected::default(),
    });

    entries.push(CorpusEntry {
        name: "example-2.4".into(),
        // Normal vectors of the four lines: x_0, x_1, x_1 - x_2, x_2.
        spec: matrix_spec(&[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 0, -1, 1]]),
        expected: Expected {
            graded_ranks: Some((vec![1, 5, 1], Provenance::Derived)),
            // Cross-verified normal form of the staircase; the commonly
            // printed worked value carries the opposite sign on both terms.
            staircase: Some((
                ChowElement::from_terms(
                    Presentation::AllFlats,
                    [
                        (ChainMonomial::one(), 1),
                        (ChainMonomial::variable(Subset::from_elements([1, 2, 3])), 1),
                        (ChainMonomial::variable(Subset::full(4)), 1),
                    ],
                ),
                Provenance::Derived,
            )),
            csm: Some((
                vec![
                    MinkowskiWeight::zero(0),
                    weight(1, &[(&[&[0]], -1), (&[&[1, 2, 3]], -1)]),
                    weight(
                        2,
                        &[
                            (&[&[0], &[0, 1]], 1),
                            (&[&[0], &[0, 2]], 1),
                            (&[&[0], &[0, 3]], 1),
                            (&[&[1], &[0, 1]], 1),
                            (&[&[1], &[1, 2, 3]], 1),
                            (&[&[2], &[0, 2]], 1),
                            (&[&[2], &[1, 2, 3]], 1),
                            (&[&[3], &[0, 3]], 1),
                            (&[&[3], &[1, 2, 3]], 1),
                        ],
                    ),
                ],
                Provenance::Derived,
            )),
        },
    });

    // Edges of K4 in the order (01),(02),(03),(12),(13),(23); the rank-2
    // flats are the four triangles and the three perfect matchings.
    let k4_triangles: [&[usize]; 4] = [&[0, 1, 3], &[0, 2, 4], &[1, 2, 5], &[3, 4, 5]];
    let mut k4_dim1: Vec<(&[usize], i64)> = Vec::new();
    let k4_edges: [&[usize]; 6] = [&[0], &[1], &[2], &[3], &[4], &[5]];
    for e in k4_edges {
        k4_dim1.push((e, -1));
    }
    for t in k4_triangles {
        k4_dim1.push((t, -1));
    }
    entries.push(CorpusEntry {
        name: "k4".into(),
        spec: MatroidSpec::Graphic {
            vertices: 4,
            edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        },
        expected: Expected {
            graded_ranks: None,
            staircase: None,
            // Dimension 1: -1 on every edge ray and triangle ray, 0 on the
            // matchings (their restrictions are two coloops, beta zero);
            // dimension 0: the reduced characteristic polynomial at one.
            csm: Some((
                vec![
                    weight(0, &[(&[], 2)]),
                    MinkowskiWeight::from_weights(
                        1,
                        k4_dim1.iter().map(|&(els, w)| {
                            let cone = FlagCone::new(vec![Subset::from_elements(
                                els.iter().copied(),
                            )])
                            .expect("single flat is a flag");
                            (cone, w)
                        }),
                    ),
                    MinkowskiWeight::from_weights(2, {
                        let mut cones = Vec::new();
                        for e in k4_edges {
                            for t in k4_triangles {
                                let es = Subset::from_elements(e.iter().copied());
                                let ts = Subset::from_elements(t.iter().copied());
                                if es.is_subset_of(ts) {
                                    cones.push((FlagCone::new(vec![es, ts]).unwrap(), 1));
                                }
                            }
                            for mch in [[0usize, 5], [1, 4], [2, 3]] {
                                let es = Subset::from_elements(e.iter().copied());
                                let ms = Subset::from_elements(mch);
                                if es.is_subset_of(ms) {
                                    cones.push((FlagCone::new(vec![es, ms]).unwrap(), 1));
                                }
                            }
                        }
                        cones
                    }),
                ],
                Provenance::Derived,
            )),
        },
    });

    entries.push(CorpusEntry {
        name: "fano".into(),
        spec: MatroidSpec::Bases {
            n: 7,
            bases: fano_bases(),
        },
        expected: Expected::default(),
    });

    entries.push(CorpusEntry {
        name: "nonfano".into(),
        // The binary columns 001..111 over the rationals: six of the seven
        // Fano lines stay dependent, {2,4,5} becomes a basis.
        spec: matrix_spec(&[
            &[0, 0, 0, 1, 1, 1, 1],
            &[0, 1, 1, 0, 0, 1, 1],
            &[1, 0, 1, 0, 1, 0, 1],
        ]),
        expected: Expected::default(),
    });

    entries.push(CorpusEntry {
        name: "parallel".into(),
        // Elements 0 and 1 are parallel copies; not simple.
        spec: matrix_spec(&[&[1, 1, 0, 1], &[0, 0, 1, 1]]),
        expected: Expected::default(),
    });

    entries
}

/// Names of the builtin corpus entries, in canonical order.
pub fn builtin_names() -> Vec<String> {
    builtin_corpus().into_iter().map(|e| e.name).collect()
}

/// Looks up one builtin entry by name.
pub fn builtin(name: &str) -> Option<CorpusEntry> {
    builtin_corpus().into_iter().find(|e| e.name == name)
}
