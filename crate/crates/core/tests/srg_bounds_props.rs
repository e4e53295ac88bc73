use num_rational::Ratio;
use proptest::prelude::*;
use ramsey_forge_core::bounds::{
    order_threshold, counting_gate, exact_value, psi_report, upper_set_ramsey, upper_size_ramsey, Scenario,
};
use ramsey_forge_core::gf::FieldSpec;
use ramsey_forge_core::srg::{
    complement_params, named_graph, neighborhood_partition, paley_graph, srg_params, Graph, NamedGraph, SrgCheck,
    SrgParams,
};
use ramsey_forge_core::Error;

fn graph_pool() -> Vec<Graph> {
    let mut out: Vec<Graph> = [5u64, 9, 13, 17, 25]
        .iter()
        .map(|&q| paley_graph(&FieldSpec::with_order(q).unwrap()).unwrap())
        .collect();
    for n in 2..=5 {
        out.push(named_graph(NamedGraph::Rook, n).unwrap());
    }
    for n in 4..=7 {
        out.push(named_graph(NamedGraph::Triangular, n).unwrap());
    }
    out
}

fn isqrt(x: u128) -> u128 {
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn partition_matches_closed_form(gi in 0usize..13, x in 0usize..1000, y in 0usize..1000) {
        let pool = graph_pool();
        let g = &pool[gi % pool.len()];
        let (a, b) = (x % g.n(), y % g.n());
        prop_assume!(a != b);
        let SrgCheck::Strong(p) = srg_params(g).unwrap() else { panic!("pool graph not strongly regular") };
        let direct = neighborhood_partition(g, a, b).unwrap();
        prop_assert_eq!(Some(direct), p.predicted_partition(g.is_adjacent(a, b)));
        prop_assert_eq!(direct.total(), g.n() - 2);
        let cp = complement_params(&p).unwrap();
        let SrgCheck::Strong(measured) = srg_params(&g.complement()).unwrap() else {
            panic!("complement not strongly regular")
        };
        prop_assert_eq!(cp, measured);
    }

    #[test]
    fn threshold_matches_isqrt_oracle(n in 2u64..40, alpha in 0u64..6, offset in -3i64..=3) {
        let x = (2 * n as u128 - 1) * (4 * alpha as u128 * n as u128 - 4 * alpha as u128 + 1);
        // Smallest zeta with (zeta - X)^2 > 2X^2.
        let edge = x + isqrt(2 * x * x) + 1;
        let zeta = (edge as i128 + offset as i128).max(0) as u64;
        let t = order_threshold(n, zeta, alpha).unwrap();
        let oracle = (zeta as u128) > x && (zeta as u128 - x) > isqrt(2 * x * x);
        prop_assert_eq!(t.holds, oracle);
        prop_assert_eq!(t.holds, offset >= 0);
    }

    #[test]
    fn exact_value_near_threshold(n in prop::sample::select(vec![2u64, 5, 8, 11]), alpha in 0u64..3, offset in -4i64..=4) {
        let x = (2 * n as u128 - 1) * (4 * alpha as u128 * n as u128 - 4 * alpha as u128 + 1);
        let edge = (x + isqrt(2 * x * x) + 1) as i64;
        let zeta = ((edge + offset) & !1).max(2) as u64;
        match exact_value(n, zeta, alpha, false) {
            Ok(cert) => {
                prop_assert!(cert.threshold.holds);
                prop_assert!(cert.gate.holds);
                prop_assert_eq!(cert.report.exact, Some(4 * n - 2));
            }
            Err(Error::HypothesisFailed { clause, .. }) => {
                prop_assert_eq!(clause, "order-threshold");
                prop_assert!(!order_threshold(n, zeta, alpha).unwrap().holds);
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn counting_gate_is_monotone_in_c(
        s in 1u64..40,
        widths in prop::collection::vec(1u64..80, 2..4),
        c in 1u64..60,
    ) {
        let here = counting_gate(s, &widths, c).unwrap();
        let next = counting_gate(s, &widths, c + 1).unwrap();
        prop_assert!(!here.holds || next.holds);
        let k = widths.len() as i128;
        let x = Ratio::new((c as i128 - 1) * s as i128, k);
        let lhs = Ratio::from_integer(k * c as i128 * s as i128) * x * (x - 1) / 2;
        prop_assert_eq!(here.lhs, lhs);
    }

    #[test]
    fn scenario_uppers_match_standalone_theorems(gi in 0usize..13, zeta in 2u64..12, alpha in 0u64..12) {
        prop_assume!(alpha <= zeta);
        let pool = graph_pool();
        let SrgCheck::Strong(p) = srg_params(&pool[gi % pool.len()]).unwrap() else { panic!() };
        let sc = Scenario::new(p, zeta, alpha).unwrap();
        let (set, size) = psi_report(&sc).unwrap();
        prop_assert_eq!(set.lower.value, p.n() + 1);
        prop_assert_eq!(size.lower.value, zeta + 1);
        let g = upper_set_ramsey(zeta, sc.target, 2).unwrap();
        let up = set.upper.clone().unwrap();
        prop_assert_eq!((up.value, up.applicable), (g.value, g.holds));
        let g = upper_size_ramsey(p.n(), &[sc.target, sc.target]).unwrap();
        let up = size.upper.clone().unwrap();
        prop_assert_eq!((up.value, up.applicable), (g.value, g.holds));
        for r in [&set, &size] {
            if let Some(e) = r.exact {
                prop_assert_eq!(e, r.lower.value);
            }
        }
    }
}

#[test]
fn equation_one_holds_for_catalogue() {
    for g in graph_pool() {
        let SrgCheck::Strong(p) = srg_params(&g).unwrap() else { panic!("not strongly regular") };
        assert_eq!((p.n() - p.k() - 1) * p.mu(), p.k() * (p.k() - p.lambda() - 1));
        assert!(SrgParams::new(p.n(), p.k(), p.lambda(), p.mu()).is_ok());
    }
}
