use ellsum::parallel;
use ellsum::{render_text, OutputRecord};
use ellsum_core::classifier::classify;
use ellsum_core::search::find_solutions;
use ellsum_core::ProblemInstance;
use proptest::prelude::*;
use serde_json::json;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn parallel_search_matches_sequential(k in 1u32..7, l in 2u32..7, x_max in 1u64..40) {
        let i = ProblemInstance::new(k, l).unwrap();
        prop_assert_eq!(parallel::find_solutions(i, x_max, None), find_solutions(i, x_max, None));
    }

    #[test]
    fn parallel_classify_matches_sequential(k in 1u32..12, l in 2u32..8, n_max in 2u32..20) {
        let i = ProblemInstance::new(k, l).unwrap();
        let sequential: Vec<_> = (2..=n_max).map(|n| classify(i, n).unwrap()).collect();
        prop_assert_eq!(parallel::classify_range(i, n_max).unwrap(), sequential);
    }

    #[test]
    fn records_survive_a_json_round_trip(x in 1u64..1000, y in "[1-9][0-9]{0,30}", n in 2u32..64) {
        let params = [("k".to_string(), json!(2)), ("l".to_string(), json!(3))].into();
        let rec = OutputRecord::ok("search", params, json!({ "x": x, "y": y, "n": n }));
        let back: OutputRecord = serde_json::from_str(&rec.to_json_line()).unwrap();
        prop_assert_eq!(render_text(&back), format!("{x} {y} {n}"));
        prop_assert_eq!(back, rec);
    }
}
