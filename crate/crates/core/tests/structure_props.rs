use proptest::prelude::*;
use triop_core::cybe::{coadjoint_double, switch12, tensor_from_operator, yang_baxter_bracket};
use triop_core::ooperator::{
    catalogue, check_o_operator_direct, conditions_vanish_i64, operator_from_scalars, scalars_from_i64,
    specialized_conditions_3d, ParamOperator,
};
use triop_core::prelie::{
    check_pre_lie_axioms, check_pre_lie_by_constants, induce_from_operator_unchecked, sub_adjacent, PreLieAlgebra,
};
use triop_core::sampling::Sampler;
use triop_core::scalar::LaurentPoly;
use triop_core::trisys::{check_fundamental_identity, TriAlgebra, TwoTensor, Vector};

fn int_matrix() -> impl Strategy<Value = [[i64; 3]; 3]> {
    prop::array::uniform3(prop::array::uniform3(-2i64..=2))
}

fn small_prelie(dim: usize) -> impl Strategy<Value = PreLieAlgebra> {
    let keys = dim * (dim - 1) / 2 * dim;
    prop::collection::vec(prop::collection::vec(-1i64..=1, dim), keys).prop_map(move |vals| {
        let mut p = PreLieAlgebra::zero(dim);
        let mut it = vals.into_iter();
        for i in 0..dim {
            for j in i + 1..dim {
                for k in 0..dim {
                    p.set_product(i, j, k, Vector::from_ints(&it.next().unwrap())).unwrap();
                }
            }
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn cubic_conditions_decide_the_operator_condition(m in int_matrix()) {
        let op = operator_from_scalars(&scalars_from_i64(&m));
        let direct = check_o_operator_direct(&TriAlgebra::a3(), &op).unwrap().is_empty();
        prop_assert_eq!(conditions_vanish_i64(&m), direct);
        let symbolic = specialized_conditions_3d(&op).unwrap().iter().all(LaurentPoly::is_zero);
        prop_assert_eq!(symbolic, direct);
    }

    #[test]
    fn axiom_checkers_agree_dim2(p in small_prelie(2)) {
        prop_assert_eq!(check_pre_lie_axioms(&p).is_empty(), check_pre_lie_by_constants(&p).is_empty());
    }

    #[test]
    fn axiom_checkers_agree_dim3(p in small_prelie(3)) {
        prop_assert_eq!(check_pre_lie_axioms(&p).is_empty(), check_pre_lie_by_constants(&p).is_empty());
    }

    #[test]
    fn pre_lie_products_have_lie_sub_adjacent(p in small_prelie(3)) {
        if check_pre_lie_axioms(&p).is_empty() {
            prop_assert!(check_fundamental_identity(&sub_adjacent(&p)).is_empty());
        }
    }

    #[test]
    fn family_instances_are_operators(seed in any::<u64>(), index in 0usize..31) {
        let f = &catalogue()[index];
        prop_assume!(f.name != "O19" && f.name != "O29");
        let mut s = Sampler::new(seed);
        if let Some(m) = s.family_instance(f, 3) {
            let op = operator_from_scalars(&m);
            let a = TriAlgebra::a3();
            prop_assert!(check_o_operator_direct(&a, &op).unwrap().is_empty());
            let p = induce_from_operator_unchecked(&a, &op);
            prop_assert!(check_pre_lie_axioms(&p).is_empty());
        }
    }

    #[test]
    fn operator_tensor_is_skew_and_decides_the_equation(m in prop::array::uniform3(prop::array::uniform3(-1i64..=1))) {
        let double = coadjoint_double(&TriAlgebra::a3());
        let op = operator_from_scalars(&scalars_from_i64(&m));
        let r = tensor_from_operator(&double, &op).unwrap();
        prop_assert!(r.is_skew_symmetric());
        prop_assert_eq!(switch12(&switch12(&r)), r.clone());
        let solves = yang_baxter_bracket(&double, &r).unwrap().is_zero();
        prop_assert_eq!(solves, conditions_vanish_i64(&m));
    }

    #[test]
    fn bracket_scales_cubically(m in prop::array::uniform3(prop::array::uniform3(-1i64..=1)), c in -3i64..=3) {
        let double = coadjoint_double(&TriAlgebra::a3());
        let r = tensor_from_operator(&double, &operator_from_scalars(&scalars_from_i64(&m))).unwrap();
        let lambda = LaurentPoly::int(c);
        let lhs = yang_baxter_bracket(&double, &r.scale(&lambda)).unwrap();
        prop_assert_eq!(lhs, yang_baxter_bracket(&double, &r).unwrap().scale(&LaurentPoly::int(c * c * c)));
    }
}

#[test]
fn zero_tensor_and_operator() {
    let double = coadjoint_double(&TriAlgebra::a3());
    assert_eq!(tensor_from_operator(&double, &ParamOperator::zero(3)).unwrap(), TwoTensor::zero(6));
    assert!(yang_baxter_bracket(&double, &TwoTensor::zero(6)).unwrap().is_zero());
}
