use hairycalc::engine::{build_block, BlockKey, BuildOptions, ComplexKind};
use hairycalc::graded::{koszul_sign, OrientationElement, OrientationKind, Sign};
use hairycalc::hairy::{canonicalize, enumerate_generators, HairyGraph};
use hairycalc::koszul::{arnold_reduce_with, EdgeAlgebra, RewriteOrder};
use hairycalc::linalg::{field_rank, homology_dims, rank, GradedComplex, RankOptions};
use hairycalc::oracles::{free_graded_lie_dims, lie_operad_dim, necklace_count, weights_of_total, FreeLie};
use hairycalc::scalar::Scalar;
use hairycalc::{Fp31, Params, QMatrix, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn shuffled(n: usize, rng: &mut StdRng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

proptest! {
    #[test]
    fn koszul_sign_is_multiplicative(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let degrees: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..10)).collect();
        let tau = shuffled(n, &mut rng);
        let sigma = shuffled(n, &mut rng);
        let moved: Vec<i64> = tau.iter().map(|&i| degrees[i]).collect();
        let both: Vec<usize> = sigma.iter().map(|&i| tau[i]).collect();
        let lhs = koszul_sign(&both, &degrees).unwrap();
        let rhs = koszul_sign(&tau, &degrees).unwrap() * koszul_sign(&sigma, &moved).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permuting_even_elements_is_free(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let degrees: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..10)).collect();
        let even: Vec<usize> = (0..n).filter(|&i| degrees[i] % 2 == 0).collect();
        let mut targets = even.clone();
        targets.shuffle(&mut rng);
        let mut perm: Vec<usize> = (0..n).collect();
        for (a, b) in even.iter().zip(&targets) {
            perm[*a] = *b;
        }
        prop_assert_eq!(koszul_sign(&perm, &degrees).unwrap(), Sign::Plus);
    }

    #[test]
    fn arnold_rewriting_is_confluent(seed in any::<u64>(), k in 2usize..6, n in 2i64..6, colored in any::<bool>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let alg = if colored { EdgeAlgebra::colored() } else { EdgeAlgebra::ambient(n) };
        let len = rng.gen_range(1..k);
        let mono: Vec<(usize, usize)> = (0..len)
            .map(|_| {
                let a = rng.gen_range(0..k);
                let mut b = rng.gen_range(0..k - 1);
                if b >= a {
                    b += 1;
                }
                (a, b)
            })
            .collect();
        let first = arnold_reduce_with(alg, &mono, RewriteOrder::FirstPair).unwrap();
        let last = arnold_reduce_with(alg, &mono, RewriteOrder::LastPair).unwrap();
        prop_assert_eq!(first, last);
    }

    #[test]
    fn rank_ignores_transpose_and_permutations(seed in any::<u64>(), rows in 1usize..9, cols in 1usize..9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut trip = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(0.4) {
                    trip.push((r, c, Rational::new(rng.gen_range(-5i64..6).into(), rng.gen_range(1i64..4).into())));
                }
            }
        }
        let m = QMatrix::from_triplets(rows, cols, trip).unwrap();
        let r = rank(&m);
        prop_assert_eq!(rank(&m.transpose()), r);
        let p = m.permuted(&shuffled(rows, &mut rng), &shuffled(cols, &mut rng)).unwrap();
        prop_assert_eq!(rank(&p), r);
        prop_assert!(r <= rows.min(cols));
    }

    #[test]
    fn prime_rank_agrees_on_small_integer_matrices(seed in any::<u64>(), rows in 1usize..6, cols in 1usize..9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut q = Vec::new();
        let mut f = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                if rng.gen_bool(0.5) {
                    let v: i64 = rng.gen_range(-5..6);
                    q.push((r, c, Rational::from_i64(v)));
                    f.push((r, c, Fp31::from_i64(v)));
                }
            }
        }
        let q = QMatrix::from_triplets(rows, cols, q).unwrap();
        let f = hairycalc::linalg::SparseMatrix::<Fp31>::from_triplets(rows, cols, f).unwrap();
        prop_assert_eq!(field_rank(&f), rank(&q));
    }

    #[test]
    fn lie_bracket_is_graded_antisymmetric_and_jacobi(seed in any::<u64>(), d0 in -2i64..4, d1 in -2i64..4) {
        let mut rng = StdRng::seed_from_u64(seed);
        let lie = FreeLie::new(vec![d0, d1]).unwrap();
        let pick = |rng: &mut StdRng| loop {
            let n = rng.gen_range(1..3usize);
            let ws = weights_of_total(2, n);
            let w = ws[rng.gen_range(0..ws.len())].clone();
            let b = lie.basis(&w).unwrap();
            if !b.is_empty() {
                return b[rng.gen_range(0..b.len())].clone();
            }
        };
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let sign = if (x.degree * y.degree) % 2 == 0 { -1 } else { 1 };
        let xy = lie.bracket(&x, &y);
        let yx = lie.bracket(&y, &x).scaled(sign);
        prop_assert_eq!(&xy.words, &yx.words);
        // (-1)^{|x||z|}[x,[y,z]] + cyclic = 0
        let term = |a: &hairycalc::oracles::LieElement, b: &hairycalc::oracles::LieElement, c: &hairycalc::oracles::LieElement| {
            let s = if (a.degree * c.degree) % 2 == 0 { 1 } else { -1 };
            lie.bracket(a, &lie.bracket(b, c)).scaled(s)
        };
        let sum = term(&x, &y, &z).add(&term(&y, &z, &x)).unwrap().add(&term(&z, &x, &y)).unwrap();
        prop_assert!(sum.is_zero());
    }
}

fn hairy_pool() -> Vec<(Params, HairyGraph)> {
    let mut out = Vec::new();
    for (m, d, s, t) in [
        (vec![2], 6, vec![2], 3),
        (vec![2], 7, vec![3], 3),
        (vec![2, 3], 9, vec![1, 1], 2),
        (vec![2, 3], 8, vec![2, 1], 3),
        (vec![3], 8, vec![1], 3),
    ] {
        let p = Params::new(m, d).unwrap();
        let en = enumerate_generators(&p, &s, t, None).unwrap();
        for gens in en.by_degree.values() {
            for g in gens {
                out.push((p.clone(), g.clone()));
            }
        }
    }
    out
}

/// Relabels vertices and edges and reverses some edges, returning the new
/// graph and the sign relating it to the original.
fn scramble(g: &HairyGraph, p: &Params, rng: &mut StdRng) -> (HairyGraph, Sign) {
    let nv = g.vertices.len();
    let ne = g.edges.len();
    let vperm = shuffled(nv, rng); // old v -> new vperm[v]
    let eorder = shuffled(ne, rng); // new edge i is old edge eorder[i]
    let mut vertices = g.vertices.clone();
    for v in 0..nv {
        vertices[vperm[v]] = g.vertices[v];
    }
    let mut sign = Sign::Plus;
    let mut edges = Vec::with_capacity(ne);
    for &old in &eorder {
        let (a, b) = g.edges[old];
        if rng.gen_bool(0.5) {
            edges.push((vperm[b], vperm[a]));
            sign *= Sign::pow(p.d);
        } else {
            edges.push((vperm[a], vperm[b]));
        }
    }
    // the new standard order, written in terms of the old graph's elements
    let mut inv = vec![0; nv];
    for v in 0..nv {
        inv[vperm[v]] = v;
    }
    let mut order: Vec<OrientationElement> =
        inv.iter().map(|&v| OrientationElement { kind: g.vertex_kind(v), id: v }).collect();
    order.extend(eorder.iter().map(|&e| OrientationElement { kind: OrientationKind::NonColoredEdge, id: e }));
    sign *= g.orientation_sign(&order, p).unwrap();
    (HairyGraph::new(vertices, edges), sign)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_is_relabeling_invariant(seed in any::<u64>()) {
        let pool = hairy_pool();
        let mut rng = StdRng::seed_from_u64(seed);
        let (p, g) = &pool[rng.gen_range(0..pool.len())];
        let (h, rel) = scramble(g, p, &mut rng);
        let (cg, sg) = canonicalize(g, p);
        let (ch, sh) = canonicalize(&h, p);
        prop_assert_eq!(&cg, &ch);
        if !cg.zero {
            prop_assert_eq!(sh, rel * sg);
        }
    }

    #[test]
    fn homology_ignores_basis_order(seed in any::<u64>(), which in 0usize..4) {
        let cases = [
            (vec![2], 7, vec![3], 3, ComplexKind::HairyPi),
            (vec![2, 3], 9, vec![1, 1], 3, ComplexKind::HairyPi),
            (vec![2], 6, vec![2], 2, ComplexKind::KoszulPi),
            (vec![3], 8, vec![3], 2, ComplexKind::KoszulFull),
        ];
        let (m, d, s, t, kind) = cases[which].clone();
        let key = BlockKey::new(Params::new(m, d).unwrap(), s, t, kind).unwrap();
        let block = build_block(&key, &BuildOptions::default()).unwrap();
        let c = &block.complex;
        let mut rng = StdRng::seed_from_u64(seed);
        let perms: Vec<Vec<usize>> = c.dims.iter().map(|&n| shuffled(n, &mut rng)).collect();
        let scales: Vec<Vec<i64>> = c.dims.iter().map(|&n| (0..n).map(|_| rng.gen_range(1..4) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect()).collect();
        let maps = c
            .maps
            .iter()
            .enumerate()
            .map(|(i, mat)| {
                let trip = mat.entries().iter().map(|(r, col, v)| {
                    let f = Rational::from_i64(scales[i + 1][*r]) / Rational::from_i64(scales[i][*col]);
                    (perms[i + 1][*r], perms[i][*col], v.clone() * f)
                });
                QMatrix::from_triplets(mat.rows(), mat.cols(), trip).unwrap()
            })
            .collect();
        let moved = GradedComplex { degrees: c.degrees.clone(), dims: c.dims.clone(), maps };
        moved.check_square_zero().unwrap();
        let opts = RankOptions::default();
        prop_assert_eq!(homology_dims(&moved, &opts).unwrap(), homology_dims(c, &opts).unwrap());
    }
}

#[test]
fn bracket_basis_matches_series_inversion() {
    for degrees in [vec![1, 1], vec![2, 3], vec![1, 2], vec![4, 4], vec![3]] {
        let lie = FreeLie::new(degrees.clone()).unwrap();
        let dims = free_graded_lie_dims(&degrees, 5).unwrap();
        for n in 1..=5 {
            for w in weights_of_total(degrees.len(), n) {
                let basis = lie.basis(&w).unwrap();
                assert_eq!(basis.len(), dims.weight_total(&w), "degrees {degrees:?} weight {w:?}");
                assert_eq!(FreeLie::span_rank(&basis), basis.len());
            }
        }
    }
}

#[test]
fn even_generators_give_necklace_counts() {
    for q in 1..=3usize {
        let dims = free_graded_lie_dims(&vec![2; q], 6).unwrap();
        for n in 1..=6 {
            let total: usize = weights_of_total(q, n).iter().map(|w| dims.weight_total(w)).sum();
            assert_eq!(BigInt::from(total), necklace_count(q as u64, n as u64), "q={q} n={n}");
        }
    }
}

#[test]
fn multilinear_part_has_factorial_size() {
    for n in 1..=5usize {
        let lie = FreeLie::new(vec![0; n]).unwrap();
        let basis = lie.basis(&vec![1; n]).unwrap();
        assert_eq!(BigInt::from(basis.len()), lie_operad_dim(n as i64).unwrap());
    }
}
