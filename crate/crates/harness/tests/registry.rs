use modlat_harness::corpus::{builtin_corpus, standard_modules, CorpusInput};
use modlat_harness::runner::parse_filter;
use modlat_harness::theorems::{canonical_id, THEOREMS};
use modlat_harness::{run_verification, RunConfig, Status};

#[test]
fn filter_vocabulary() {
    assert_eq!(canonical_id("lemma-3.4"), Some("lem-3.4"));
    assert_eq!(canonical_id("Theorem-1.4"), Some("thm-1.4"));
    assert_eq!(canonical_id("corollary-3.2"), Some("cor-3.2"));
    assert_eq!(canonical_id("good-module"), Some("good-module"));
    assert_eq!(canonical_id("lem-9.9"), None);
    assert_eq!(parse_filter("all").unwrap().len(), THEOREMS.len());
    assert_eq!(parse_filter("prop-3.14, lem-1.2,lem-1.2").unwrap(), vec!["lem-1.2", "prop-3.14"]);
    assert!(parse_filter("nope").is_err());
    let pinned = [
        "thm-1.4", "thm-1.5", "lem-1.2", "rem-1.6", "prop-2.2", "prop-2.5", "cor-2.6", "lem-2.7", "prop-2.8",
        "thm-2.10", "thm-3.1", "cor-3.2", "lem-3.4", "thm-3.5", "cor-3.7", "thm-3.9", "prop-3.13", "prop-3.14",
        "thm-3.15", "good-module",
    ];
    for id in pinned {
        assert_eq!(canonical_id(id), Some(id));
    }
}

#[test]
fn builtin_corpus_covers_required_rings() {
    let corpus = builtin_corpus().unwrap();
    let ids: Vec<String> = corpus.iter().map(|e| e.id()).collect();
    for n in [1, 2, 3, 4, 6, 8, 9, 12] {
        assert!(ids.contains(&format!("cyclic({n})")));
    }
    for id in [
        "matrix(cyclic(2),2)",
        "triangular(cyclic(2),2)",
        "triangular(cyclic(3),2)",
        "product(cyclic(2),cyclic(3))",
    ] {
        assert!(ids.contains(&id.to_string()), "{id}");
    }
    let c12 = corpus.iter().find(|e| e.id() == "cyclic(12)").unwrap();
    assert_eq!(c12.goldens.as_ref().unwrap().hdim_left, Some(2));
    let t2 = corpus.iter().find(|e| e.id() == "triangular(cyclic(2),2)").unwrap();
    let g = t2.goldens.as_ref().unwrap();
    assert_eq!((g.hdim_left, g.hdim_right), (Some(2), Some(2)));
}

#[test]
fn standard_modules_of_cyclic_four() {
    let ring = modlat_core::spec::RingSpec::cyclic(4).build().unwrap();
    let labels: Vec<String> = standard_modules(&ring).unwrap().iter().map(|s| s.label()).collect();
    assert_eq!(
        labels,
        [
            "regular-left",
            "regular-right",
            "regular-left/<2>",
            "regular-left/<1>",
            "sum(regular-left,regular-left)",
            "sum(regular-left,regular-left/<2>)",
            "sum(regular-left/<2>,regular-left/<2>)",
        ]
    );
}

#[test]
fn every_theorem_has_a_checked_instance() {
    let corpus: CorpusInput = builtin_corpus().unwrap().into_iter().map(Ok).collect();
    let report = run_verification(
        &corpus,
        &RunConfig {
            jobs: 4,
            ..RunConfig::default()
        },
    );
    assert!(report.passed(), "{}", report.to_text());
    for t in THEOREMS {
        assert!(report.rows(t.id).any(|r| r.status == Status::Pass), "{} has no checked instance", t.id);
    }
    for row in &report.results {
        assert_eq!(row.witness_digest.len(), 64);
        if row.status == Status::Skipped {
            assert!(row.reason.is_some());
        }
    }
}
