use proptest::prelude::*;
use tangle_surgery::family::{self, FamilyParams};
use tangle_surgery::network::{self, SurgeryVertex};
use tangle_surgery::{cf_eval, Error, H1Order, LensClass, SeifertSpace};

fn mp_zero_params() -> impl Strategy<Value = FamilyParams> {
    let v = -100_000i64..=100_000;
    (v.clone(), v.clone(), -200i64..=200, v, any::<bool>()).prop_map(|(l, a, n, b, twist_b)| {
        if twist_b {
            FamilyParams::new(l, 0, n, b).unwrap()
        } else {
            FamilyParams::new(l, a, n, 0).unwrap()
        }
    })
}

#[test]
fn trefoil_surgeries_have_indices_2_3_and_distance_to_6() {
    // K(l,0,0,0) is the trefoil with slope γ = l + 5: exceptional indices 2, 3, |6 - γ|.
    for l in -30i64..=30 {
        let x = FamilyParams::new(l, 0, 0, 0).unwrap();
        let space = match family::surgered_space(&x) {
            Ok(space) => space.normalize().unwrap(),
            Err(Error::ZeroDenominator { .. }) => continue,
            Err(e) => panic!("{x}: {e}"),
        };
        let mut indices: Vec<i64> = space
            .slots()
            .iter()
            .filter(|r| !r.is_integer())
            .map(|r| r.denom().try_into().unwrap())
            .collect();
        indices.sort();
        let mut expected: Vec<i64> = [2, 3, (l - 1).abs()].into_iter().filter(|&q| q >= 2).collect();
        expected.sort();
        assert_eq!(indices, expected, "{x}: {space}");
        if l == 2 {
            assert_eq!(space.is_lens_or_s3().unwrap(), LensClass::Lens(H1Order::from_signed(7.into())));
        }
    }
}

#[test]
fn pieces_glue_back_to_the_toroidal_slope_examples() {
    let x = FamilyParams::new(2, 0, 1, 0).unwrap();
    let (m1, m2) = family::decomposition_pieces(&x).unwrap();
    assert_eq!(m1, SeifertSpace::from_pairs(tangle_surgery::Base::Disk, [(-4, 3), (-2, 3)]).unwrap());
    assert_eq!(m2.to_string(), "D2(1/2, -1/2)");
    assert_eq!(family::toroidal_slope(&x), 72.into());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn three_routes_agree_far_from_the_origin(x in mp_zero_params()) {
        let slope = H1Order::from_signed(family::surgery_slope(&x));
        let steps = network::path_from_trefoil(&x).unwrap();
        let walked = network::realize_path(&SurgeryVertex::trefoil(x.l), &steps);
        prop_assert_eq!(&H1Order::from_signed(walked.slope), &slope);
        match family::surgered_space(&x) {
            Ok(space) => prop_assert_eq!(space.h1_order().unwrap(), slope),
            Err(e) => prop_assert!(matches!(e, Error::ZeroDenominator { .. }), "{}", e),
        }
    }

    #[test]
    fn sequences_evaluate_to_the_slots(x in mp_zero_params()) {
        if let (Ok(seqs), Ok(slots)) = (family::tangle_sequences(&x), family::montesinos_fractions(&x)) {
            for (seq, slot) in seqs.into_iter().zip(slots.iter()) {
                prop_assert_eq!(&cf_eval(seq).unwrap(), slot);
            }
        }
    }
}
