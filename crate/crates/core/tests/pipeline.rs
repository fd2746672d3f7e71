//! Cross-module checks: spec strings into extraction, game transcripts
//! through JSON, tables against their brute-force sources.

use hyperramsey::constructions::parity_coloring;
use hyperramsey::exact::{t_brute, t_closed, FunctionTable, TableOptions};
use hyperramsey::extraction::{erdos_rado_extract, ExtractionConfig, ExtractionOutcome};
use hyperramsey::game::{
    minimax_online, run_game, Budget, EhBuilder, GameTranscript, SeededRandom,
};
use hyperramsey::oracle_spec::parse_oracle;
use hyperramsey::scalar::ceil_u64;
use hyperramsey::{BitGraph, ColorId, Rational, SearchLimits, Tournament};
use proptest::prelude::*;

#[test]
fn file_backed_oracles_feed_extraction() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c16.g");
    std::fs::write(&g, BitGraph::cycle(16).to_text()).unwrap();
    let c1 = dir.path().join("pent.k");
    std::fs::write(&c1, parity_coloring(5).to_text()).unwrap();
    let t = dir.path().join("rot.t");
    std::fs::write(&t, Tournament::rotational(9, 4).to_text()).unwrap();
    let specs = [
        format!("stepup:graph={}:red=c3", g.display()),
        format!("lift:r=5:c1={}:seed=3", c1.display()),
        format!("tournament:file={}", t.display()),
    ];
    for spec in &specs {
        let o = parse_oracle(spec, 57_344, 0).unwrap();
        let universe = o.universe();
        let cfg = ExtractionConfig {
            s: 4,
            n: 4,
            alpha: 0.5,
            universe,
            oracle: o.as_ref(),
        };
        let r = erdos_rado_extract(&cfg).unwrap();
        if universe >= 57_344 {
            assert!(r.set().is_some(), "{spec}");
        }
        if let Some(set) = r.set() {
            let red = matches!(r.outcome, ExtractionOutcome::Red { .. });
            let c = if red { ColorId::RED } else { ColorId::BLUE };
            assert!(o.is_monochromatic(set.as_slice(), c), "{spec}");
        }
    }
}

#[test]
fn table_rows_agree_with_sources() {
    let t = FunctionTable::build(1..=60, &TableOptions::default()).unwrap();
    assert!(t.violations().is_empty());
    for r in &t.rows {
        assert_eq!(r.t, t_closed(r.s as u64));
        assert_eq!(r.d, r.t - r.g);
    }
}

#[test]
fn score_sequence_brute_force_matches_closed_form() {
    for s in 8..=40 {
        assert_eq!(
            t_brute(s, false).unwrap().value,
            t_closed(s as u64),
            "s={s}"
        );
    }
}

#[test]
fn small_game_values() {
    let lim = SearchLimits::default();
    // (3,3) stays at 9 once six vertices are allowed, under the builder's 13
    let r = minimax_online(3, 3, 6, &lim).unwrap();
    assert_eq!(r.value, Some(9));
    assert!(r.value.unwrap() <= 13);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extraction_always_verifies(s in 3usize..=4, n in 3usize..=4, den in 2u64..=4, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let probe = parse_oracle("const:red", 1, 0).unwrap();
        let alpha = Rational::new(1.into(), den.into());
        let req = ceil_u64(&ExtractionConfig { s, n, alpha: alpha.clone(), universe: 0, oracle: probe.as_ref() }
            .required_universe().unwrap());
        prop_assume!(req <= 200_000);
        let o = parse_oracle(&format!("random:p={p}:seed={seed}"), req as usize, 0).unwrap();
        let cfg = ExtractionConfig { s, n, alpha, universe: req as usize, oracle: o.as_ref() };
        let r = erdos_rado_extract(&cfg).unwrap();
        let (set, c, want) = match &r.outcome {
            ExtractionOutcome::Red { set } => (set, ColorId::RED, s),
            ExtractionOutcome::Blue { set } => (set, ColorId::BLUE, n),
            ExtractionOutcome::Failure { stage, .. } => panic!("failure at {stage}"),
        };
        prop_assert_eq!(set.len(), want);
        prop_assert!(o.is_monochromatic(set.as_slice(), c));
    }

    #[test]
    fn transcripts_survive_json(s in 2usize..=5, n in 2usize..=5, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let t = run_game(&mut EhBuilder::new(s, n).unwrap(), &mut SeededRandom::new(p, seed), (s, n), Budget::UNLIMITED).unwrap();
        let back: GameTranscript = serde_json::from_str(&t.to_json()).unwrap();
        prop_assert_eq!(&back, &t);
        let again = back.replay().unwrap();
        prop_assert_eq!(again.to_json(), t.to_json());
    }
}
