use eqrank_core::chars::{highest_weight, irreducible_character, irreducible_from_labels};
use eqrank_core::oracle::weyl_dim_formula;
use eqrank_core::embed::{maximal_equal_rank_subalgebras, restrict_character, same_formal_character};
use eqrank_core::equiv::{
    a_type_reduction, canonical_form, invariant, is_reduction_preserved, square_class_invariant, verify_det_identity,
};
use eqrank_core::metric::{allowed_ratios, angle_class, four_cos_sq, four_cos_sq_via_dual, ratio_square, AngleClass};
use eqrank_core::prelude::*;
use proptest::prelude::*;
use proptest::sample::select;

fn simple_type(max_rank: usize) -> impl Strategy<Value = SimpleType> {
    select(SimpleType::all_up_to_rank(max_rank))
}

fn algebra(max_factors: usize, max_rank: usize) -> impl Strategy<Value = SemisimpleAlgebra> {
    prop::collection::vec(simple_type(max_rank), 1..=max_factors)
        .prop_map(|f| SemisimpleAlgebra::new(f).expect("nonempty"))
}

/// Integral coordinates are exactly the lattice weights, in the e-basis
/// for type A and fundamental-weight coordinates otherwise.
fn lattice_weight(t: SimpleType) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-3i64..=3, t.rank()).prop_map(|c| Weight::from_ints(&c))
}

fn type_and_weight(max_rank: usize) -> impl Strategy<Value = (SimpleType, Weight)> {
    simple_type(max_rank).prop_flat_map(|t| (Just(t), lattice_weight(t)))
}

fn exceptional() -> impl Strategy<Value = SimpleType> {
    select(["E6", "E7", "E8", "F4", "G2"].iter().map(|s| s.parse().unwrap()).collect::<Vec<SimpleType>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbit_size_divides_weyl_order((t, w) in type_and_weight(5)) {
        let rs = RootSystem::get(t);
        prop_assert!(rs.is_in_lattice(&w));
        let orbit = rs.weyl_orbit(&w).unwrap();
        prop_assert_eq!(rs.weyl_order() % orbit.len() as u128, 0);
        let d = rs.to_dominant(&w);
        prop_assert!(rs.is_dominant(&d));
        prop_assert!(orbit.contains(&d));
    }

    #[test]
    fn reflections_preserve_the_form((t, w) in type_and_weight(6), i in 0usize..6) {
        let rs = RootSystem::get(t);
        let i = i % t.rank();
        let r = rs.reflect(i, &w);
        prop_assert_eq!(rs.inner(&r, &r), rs.inner(&w, &w));
        prop_assert_eq!(rs.reflect(i, &r), w);
    }

    #[test]
    fn cartan_from_simple_roots(t in simple_type(8)) {
        let rs = RootSystem::get(t);
        let s = rs.simple_roots();
        for i in 0..t.rank() {
            for j in 0..t.rank() {
                let a = q(2) * rs.inner(&s[i], &s[j]) / rs.inner(&s[j], &s[j]);
                prop_assert_eq!(a, rs.cartan()[(i, j)]);
            }
        }
        prop_assert_eq!(rs.roots().len(), t.root_count());
    }

    #[test]
    fn tensor_commutes_and_dual_involutes(g in algebra(2, 2), a in prop::collection::vec(0i64..=2, 4), b in prop::collection::vec(0i64..=2, 4)) {
        let n = g.rank();
        let x = irreducible_from_labels(&g, &a[..n]).unwrap();
        let y = irreducible_from_labels(&g, &b[..n]).unwrap();
        let xy = x.tensor(&y).unwrap();
        prop_assert_eq!(&xy, &y.tensor(&x).unwrap());
        prop_assert_eq!(xy.dim(), x.dim() * y.dim());
        prop_assert_eq!(&x.dual().dual(), &x);
        prop_assert!(xy.is_weyl_invariant());
    }

    #[test]
    fn angles_are_symmetric_and_routes_agree((t, u) in type_and_weight(6), i in 0usize..100) {
        prop_assume!(!u.is_zero());
        let g = SemisimpleAlgebra::simple(t);
        let m = CharacterMetric::from_character(&FormalCharacter::adjoint(&g)).unwrap();
        let rs = RootSystem::get(t);
        let v = rs.roots()[i % rs.roots().len()].clone();
        let c = four_cos_sq(&u, &v, &m).unwrap();
        prop_assert_eq!(c, four_cos_sq(&v, &u, &m).unwrap());
        prop_assert_eq!(c, four_cos_sq_via_dual(&u, &v, &m).unwrap());
        prop_assert_eq!(angle_class(&u, &v, &m).unwrap(), angle_class(&v, &u, &m).unwrap());
        prop_assert!(c <= q(4));
    }

    #[test]
    fn root_pairs_obey_the_ratio_table(t in simple_type(8), i in 0usize..500, j in 0usize..500) {
        let g = SemisimpleAlgebra::simple(t);
        let m = CharacterMetric::from_character(&FormalCharacter::adjoint(&g)).unwrap();
        let roots = RootSystem::get(t).roots().to_vec();
        let (a, b) = (&roots[i % roots.len()], &roots[j % roots.len()]);
        let class = angle_class(a, b, &m).unwrap();
        prop_assert_ne!(class, AngleClass::Other);
        if class != AngleClass::Deg90 {
            prop_assert!(allowed_ratios().contains(&ratio_square(a, b, &m).unwrap()));
        }
    }

    #[test]
    fn canonical_form_is_a_class_function(g in algebra(4, 10)) {
        let c = canonical_form(&g);
        prop_assert_eq!(&canonical_form(&c), &c);
        prop_assert_eq!(invariant(&c), invariant(&g));
        prop_assert_eq!(square_class_invariant(&g), square_class_invariant(&c));
    }

    #[test]
    fn reduction_preserves_protected_counts(g in algebra(4, 12)) {
        let (out, steps) = a_type_reduction(&g);
        prop_assert!(out.is_type_a());
        prop_assert_eq!(out.rank(), g.rank());
        for n in (1..=g.rank()).filter(|&n| is_reduction_preserved(n)) {
            prop_assert_eq!(out.count(SimpleType::a(n)), g.count(SimpleType::a(n)));
        }
        for s in steps {
            prop_assert_eq!(s.before.rank(), s.after.rank());
            prop_assert_eq!(invariant(&s.before), invariant(&s.after));
        }
    }

    #[test]
    fn invariant_is_additive(g in algebra(3, 8), h in algebra(3, 8)) {
        prop_assert_eq!(invariant(&g.product(&h)), invariant(&g).combine(&invariant(&h)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn embeddings_satisfy_the_det_identity(t in exceptional()) {
        let g = SemisimpleAlgebra::simple(t);
        let m = CharacterMetric::from_character(&FormalCharacter::adjoint(&g)).unwrap();
        for e in maximal_equal_rank_subalgebras(t) {
            let r = verify_det_identity(&g, e.sub(), e.sub_simple_roots(), &m).unwrap();
            prop_assert!(r.holds, "{} > {}", t, e.sub());
            prop_assert!(r.matches_invariants, "{} > {}", t, e.sub());
            prop_assert_eq!(invariant(e.sub()), invariant(&g));
        }
    }

    #[test]
    fn restrictions_agree_across_embeddings(t in exceptional(), labels in prop::collection::vec(0i64..=1, 8)) {
        prop_assume!(t.rank() <= 7);
        let g = SemisimpleAlgebra::simple(t);
        let hw = highest_weight(&g.layout(), &labels[..t.rank()]).unwrap();
        prop_assume!(weyl_dim_formula(&g, &hw).unwrap() <= 2000);
        let c = irreducible_character(&g, &hw).unwrap();
        let embs = maximal_equal_rank_subalgebras(t);
        let rs: Vec<_> = embs.iter().map(|e| restrict_character(&c, e).unwrap()).collect();
        for k in 1..embs.len() {
            prop_assert!(same_formal_character(&rs[0], &embs[0], &rs[k], &embs[k]).unwrap());
            prop_assert_eq!(rs[k].dim(), c.dim());
        }
    }
}
