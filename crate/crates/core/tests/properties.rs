use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

use valuation_lab::bounds::{MultiValuation, ValuationBundle};
use valuation_lab::cli::file::{parse, Encoding, TonoParams, ValuationEntry, ValuationFile};
use valuation_lab::config::Configuration;
use valuation_lab::fuzz::{random_configuration, trial_rng};
use valuation_lab::invariants::{
    from_maximal_contact, maximal_contact_values, multiplicity_sequence, noether_pairing,
    puiseux_exponents,
};
use valuation_lab::surface::{intersect_hirzebruch, lambda_divisor, npi_check, HirzebruchClass};

fn configuration(max_points: usize) -> impl Strategy<Value = Configuration> {
    any::<u64>().prop_map(move |seed| random_configuration(&mut trial_rng(seed, 0), max_points))
}

proptest! {
    #[test]
    fn proximity_round_trip(cfg in configuration(14)) {
        let rebuilt = Configuration::build(&cfg.proximity_lists(), Some(cfg.tangent_count())).unwrap();
        prop_assert_eq!(rebuilt, cfg);
    }

    #[test]
    fn maximal_contact_round_trip(cfg in configuration(14), extra in 0usize..4) {
        let beta = maximal_contact_values(&cfg).beta_bar;
        let rebuilt = from_maximal_contact(&beta, 0).unwrap();
        prop_assert_eq!(rebuilt.proximity_lists(), cfg.proximity_lists());

        let longer = from_maximal_contact(&beta, extra).unwrap();
        prop_assert_eq!(longer.len(), cfg.len() + extra);
        let last = maximal_contact_values(&longer).last().clone();
        prop_assert_eq!(last, beta.last().unwrap() + BigInt::from(extra));
    }

    #[test]
    fn multiplicities_do_not_increase(cfg in configuration(14)) {
        let v = multiplicity_sequence(&cfg);
        prop_assert!(v.values().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(v.values().last().unwrap().is_one());
    }

    #[test]
    fn puiseux_exponents_are_fractional(cfg in configuration(14)) {
        let genus = maximal_contact_values(&cfg).genus();
        let p = puiseux_exponents(&cfg);
        for j in 1..=genus {
            let b = &p.beta_prime[j];
            prop_assert!(*b > num_rational::BigRational::one(), "β'_{} = {}", j, b);
            prop_assert!(!b.is_integer(), "β'_{} = {}", j, b);
        }
    }

    #[test]
    fn tangent_value_is_the_line_pairing(cfg in configuration(14)) {
        let v = multiplicity_sequence(&cfg).into_vec();
        let line: Vec<BigInt> = cfg.points().iter().map(|p| BigInt::from(p.on_tangent() as u8)).collect();
        let t = noether_pairing(&cfg, &v, &line).unwrap();
        let bundle = ValuationBundle::new(cfg);
        prop_assert_eq!(&t, bundle.tangent_value());
    }

    #[test]
    fn non_positivity_is_monotone(cfg in configuration(14)) {
        let flags: Vec<bool> = (0..8).map(|d| npi_check(&cfg, d).non_positive).collect();
        prop_assert!(flags.windows(2).all(|w| !w[0] || w[1]), "{:?}", flags);
    }

    #[test]
    fn mu_hat_bound_dominates_volume(cfg in configuration(14)) {
        let bundle = ValuationBundle::new(cfg);
        let b = bundle.mu_hat_upper_bound();
        prop_assert!(&b * &b >= *bundle.inverse_volume());
    }

    #[test]
    fn single_valuation_multi_bound(cfg in configuration(14)) {
        let bundle = ValuationBundle::new(cfg);
        let mv = MultiValuation::general_position(vec![bundle.clone()]);
        prop_assert_eq!(mv.multi_ratio_bound(), bundle.ratio_bound());
    }

    /// Curves whose Hirzebruch class pairs non-negatively with `Λ_{δ₀}` have
    /// degree at least the degree bound.
    #[test]
    fn degree_bound_holds_for_nef_pairings(
        cfg in configuration(10).prop_filter("needs a tangent line", |c| c.len() >= 2),
        a in 0i64..40,
        b in 0i64..40,
        seed in any::<u64>(),
    ) {
        let bundle = ValuationBundle::new(cfg.clone());
        let delta = bundle.delta0 as u64;
        let mut rng = trial_rng(seed, 1);
        let m: Vec<BigInt> = (0..cfg.len()).map(|_| BigInt::from(rand::Rng::gen_range(&mut rng, 0..6))).collect();
        let class = HirzebruchClass::new(a, b, m.clone(), delta);
        let pairing = intersect_hirzebruch(&lambda_divisor(&cfg, delta), &class).unwrap();
        if !pairing.is_negative() {
            let bound = bundle.degree_lower_bound(&m).unwrap();
            let d = num_rational::BigRational::from_integer(BigInt::from(a.max(b)));
            prop_assert!(bound <= d, "bound {} > d {}", bound, d);
        }
    }

    #[test]
    fn file_round_trip(
        seeds in prop::collection::vec(any::<u64>(), 1..4),
        tono in prop::option::of((3i64..5, 0i64..3)),
        named in any::<bool>(),
        trailing in prop::option::of(0usize..3),
    ) {
        let mut entries: Vec<ValuationEntry> = Vec::new();
        for (i, seed) in seeds.iter().enumerate() {
            let cfg = random_configuration(&mut trial_rng(*seed, 0), 10);
            let name = named.then(|| format!("v{i}"));
            let encoding = if i % 2 == 0 {
                Encoding::Proximity { lists: cfg.proximity_lists(), tangent_count: Some(cfg.tangent_count()) }
            } else {
                let values = maximal_contact_values(&cfg).beta_bar.iter().map(|b| u64::try_from(b).unwrap()).collect();
                Encoding::MaximalContact { values, trailing_free: trailing }
            };
            entries.push(ValuationEntry::new(name, encoding));
        }
        if let Some((a, e)) = tono {
            entries.push(ValuationEntry::new(None, Encoding::Tono(TonoParams { a, e })));
        }
        let file = ValuationFile::new(entries, None).unwrap();
        let text = file.serialize();
        prop_assert_eq!(parse(&text).unwrap(), file);
    }
}
