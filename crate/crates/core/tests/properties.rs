use std::collections::BTreeSet;
use std::sync::OnceLock;

use bks_core::bases::{build_ortho_graph, enumerate_maximal_bases, BasisSet};
use bks_core::claims::proof_bases;
use bks_core::coloring::{check_colorable, export_cnf, KsInstance};
use bks_core::dimacs::{self, Cnf, SatResult};
use bks_core::geometry::{pauli_to_point, quadratic_form, symplectic_form, GF2Point};
use bks_core::metrics::{distance_spectrum, hs_distance_squared, transition_matrix, DistanceEngine, Rational};
use bks_core::pauli::PauliOp;
use bks_core::rays::{state_ray_table, RayTable};
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::sample::subsequence;

struct Fixture {
    table: RayTable,
    all: Vec<BasisSet>,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let table = state_ray_table().unwrap();
        let all = enumerate_maximal_bases(&build_ortho_graph(&table));
        Fixture { table, all }
    })
}

fn op(qubits: usize) -> impl Strategy<Value = PauliOp> {
    let top = 1u8 << qubits;
    (0..top, 0..top, any::<bool>())
        .prop_map(move |(x, z, neg)| PauliOp::from_bits(qubits, x, z, if neg { -1 } else { 1 }))
}

fn op_pair() -> impl Strategy<Value = (PauliOp, PauliOp)> {
    (1usize..=5).prop_flat_map(|n| (op(n), op(n)))
}

fn point() -> impl Strategy<Value = GF2Point> {
    (1u16..1024).prop_map(|b| GF2Point::new(5, b).unwrap())
}

fn as_set(bases: &[BasisSet]) -> BTreeSet<Vec<usize>> {
    bases.iter().map(|b| b.ray_ids().to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn product_matches_matrices((p, q) in op_pair()) {
        let prod = p.mul(&q).unwrap();
        prop_assert_eq!(prod.to_matrix(), &p.to_matrix() * &q.to_matrix());
    }

    #[test]
    fn commutation_matches_matrices((p, q) in op_pair()) {
        let (a, b) = (p.to_matrix(), q.to_matrix());
        prop_assert_eq!(p.commutes_with(&q), &a * &b == &b * &a);
    }

    #[test]
    fn symmetric_iff_even_y(p in (1usize..=5).prop_flat_map(op)) {
        let m = p.to_matrix();
        prop_assert_eq!(p.is_symmetric(), m == m.transpose());
        prop_assert_eq!(p.is_symmetric(), p.y_count() % 2 == 0);
    }

    #[test]
    fn squares_are_identity_up_to_sign(p in op(5)) {
        let sq = p.mul(&p).unwrap();
        prop_assert!(sq.is_identity());
        prop_assert_eq!(sq.sign(), if p.is_symmetric() { 1 } else { -1 });
    }

    #[test]
    fn symplectic_form_detects_commutation(u in point(), v in point()) {
        let (p, q) = (u.to_pauli(), v.to_pauli());
        prop_assert_eq!(symplectic_form(&u, &v) == 0, p.commutes_with(&q));
        prop_assert_eq!(pauli_to_point(&p).unwrap(), u);
    }

    #[test]
    fn quadratic_form_polarizes(u in point(), v in point()) {
        prop_assume!(u != v);
        let w = GF2Point::new(5, u.bits() ^ v.bits()).unwrap();
        prop_assert_eq!(
            quadratic_form(&w),
            quadratic_form(&u) ^ quadratic_form(&v) ^ symplectic_form(&u, &v)
        );
        prop_assert_eq!(quadratic_form(&u) == 0, u.to_pauli().is_symmetric());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transition_matrices_are_bistochastic(i in 0usize..661, j in 0usize..661) {
        let f = fixture();
        let (a, b) = (&f.all[i], &f.all[j]);
        let p = transition_matrix(&f.table, a, b).unwrap();
        let d = p.len();
        let one = Rational::one();
        for k in 0..d {
            prop_assert_eq!(p[k].iter().sum::<Rational>(), one.clone());
            prop_assert_eq!(p.iter().map(|r| r[k].clone()).sum::<Rational>(), one.clone());
        }
        let inv_d = Rational::new(1.into(), (d as i64).into());
        let centered: Rational = p.iter().flatten().map(|x| (x - &inv_d) * (x - &inv_d)).sum();
        let squares: Rational = p.iter().flatten().map(|x| x * x).sum();
        prop_assert_eq!(centered, squares - one);
    }

    #[test]
    fn distance_is_symmetric_and_engine_exact(i in 0usize..661, j in 0usize..661) {
        let f = fixture();
        let (a, b) = (&f.all[i], &f.all[j]);
        let direct = hs_distance_squared(&f.table, a, b).unwrap();
        let engine = DistanceEngine::new(&f.table).unwrap();
        prop_assert_eq!(engine.distance_squared(a, b).unwrap(), direct.clone());
        prop_assert_eq!(hs_distance_squared(&f.table, b, a).unwrap(), direct.clone());
        prop_assert!(direct >= Rational::zero() && direct <= Rational::one());
        prop_assert_eq!(direct.is_zero(), i == j);
    }

    #[test]
    fn solver_agrees_with_dpll(pick in subsequence((0..661usize).collect::<Vec<_>>(), 1..40)) {
        let f = fixture();
        let bases: Vec<BasisSet> = pick.iter().map(|&i| f.all[i].clone()).collect();
        let inst = KsInstance::new(&f.table, &bases).unwrap();
        let ours = check_colorable(&inst);
        let cnf = Cnf::parse(&export_cnf(&inst)).unwrap();
        let (theirs, _) = dimacs::solve(&cnf);
        prop_assert_eq!(ours.is_colorable(), matches!(theirs, SatResult::Sat(_)));
        if let SatResult::Sat(model) = theirs {
            prop_assert!(dimacs::check_model(&cnf, &model));
        }
        if let Some(w) = ours.witness {
            let model: Vec<bool> = w.iter().map(|&c| c == 1).collect();
            prop_assert!(dimacs::check_model(&cnf, &model));
        }
    }

    #[test]
    fn colorability_is_monotone(pick in subsequence((0..661usize).collect::<Vec<_>>(), 2..60), cut in 0.0f64..1.0) {
        let f = fixture();
        let bases: Vec<BasisSet> = pick.iter().map(|&i| f.all[i].clone()).collect();
        let keep = ((bases.len() as f64) * cut) as usize;
        let smaller = &bases[..keep.max(1)];
        let big = check_colorable(&KsInstance::new(&f.table, &bases).unwrap()).is_colorable();
        let small = check_colorable(&KsInstance::new(&f.table, smaller).unwrap()).is_colorable();
        prop_assert!(!big || small);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn spectrum_ignores_basis_order(order in Just((0..21usize).collect::<Vec<_>>()).prop_shuffle()) {
        let f = fixture();
        let proof = proof_bases();
        let shuffled: Vec<BasisSet> = order.iter().map(|&i| proof[i].clone()).collect();
        prop_assert_eq!(
            distance_spectrum(&f.table, &proof).unwrap(),
            distance_spectrum(&f.table, &shuffled).unwrap()
        );
    }

    #[test]
    fn printed_proof_stays_uncolorable_under_supersets(extra in subsequence((0..661usize).collect::<Vec<_>>(), 0..20)) {
        let f = fixture();
        let mut bases = proof_bases();
        bases.extend(extra.iter().map(|&i| f.all[i].clone()));
        prop_assert!(!check_colorable(&KsInstance::new(&f.table, &bases).unwrap()).is_colorable());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3))]

    #[test]
    fn enumeration_ignores_ray_order(perm in Just((0..160usize).collect::<Vec<_>>()).prop_shuffle()) {
        let f = fixture();
        let rays = perm.iter().map(|&i| f.table.rays[i].clone()).collect();
        let shuffled = RayTable::from_rays("shuffled", rays);
        let bases = enumerate_maximal_bases(&build_ortho_graph(&shuffled));
        let mapped: Vec<BasisSet> = bases
            .iter()
            .map(|b| BasisSet::new(b.ray_ids().iter().map(|&id| perm[id - 1] + 1).collect()))
            .collect();
        prop_assert_eq!(as_set(&mapped), as_set(&f.all));
        prop_assert_eq!(mapped.len(), 661);
    }
}
