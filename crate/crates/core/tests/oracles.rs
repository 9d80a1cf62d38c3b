mod common;

use autobox_core::oracle::{check_recogniser, check_recreation, random_document, workload_for};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const COMPOSITIONS: [&str; 4] = ["java_sql", "lua_sql", "sql_lua", "js_html"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recogniser_matches_prefix_parsing(seed in any::<u64>(), which in 0..4usize, edits in 0..6usize) {
        let comp = common::comp(COMPOSITIONS[which]);
        let w = workload_for(&comp);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let doc = random_document(&comp, &w, &mut rng, edits);
        for _ in 0..4 {
            check_recogniser(&doc, &mut rng).map_err(TestCaseError::fail)?;
        }
    }

    #[test]
    fn recreated_states_match_batch_parse(seed in any::<u64>(), which in 0..4usize) {
        let comp = common::comp(COMPOSITIONS[which]);
        let w = workload_for(&comp);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        check_recreation(&comp, &w, &mut rng).map_err(TestCaseError::fail)?;
    }
}

#[test]
fn recogniser_finds_every_complete_prefix() {
    let comp = common::comp("java_sql");
    let doc = autobox_core::engine::Document::new(comp, "int x = SELECT a FROM t WHERE b + c;");
    let r = doc.recognise_at(doc.root(), 8, 1);
    assert_eq!(r.ends, vec![16, 23, 31, 35]);
    assert!(!r.capped);
    assert!(doc.recognise_at(doc.root(), 15, 1).ends.is_empty());
}

#[test]
fn hint_blocks_text_starts() {
    let comp = common::comp("js_html");
    let doc = autobox_core::engine::Document::new(comp, "var a = hello <b>x</b>;");
    assert!(doc.recognise_at(doc.root(), 8, 1).ends.is_empty());
    // Trailing `;` is HTML text too.
    assert_eq!(doc.recognise_at(doc.root(), 14, 1).ends, vec![22, 23]);
}
