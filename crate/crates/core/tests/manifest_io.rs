// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{fixture, parseable_manifests};
use vistrace::{parse_manifest, serialize_manifest, validate_manifest, Code};

#[test]
fn figure_one_shape_and_golden() {
    let bytes = std::fs::read(fixture("figure1.json")).unwrap();
    let m = parse_manifest(&bytes).unwrap();
    assert_eq!((m.nodes.len(), m.edges.len()), (5, 4));
    let golden = std::fs::read(fixture("golden/figure1.canonical.json")).unwrap();
    assert_eq!(serialize_manifest(&m), golden);
}

#[test]
fn round_trip_every_fixture() {
    let paths = parseable_manifests();
    assert!(paths.len() >= 20);
    for path in paths {
        let m = parse_manifest(&std::fs::read(&path).unwrap()).unwrap();
        let once = serialize_manifest(&m);
        let back = parse_manifest(&once).unwrap();
        assert_eq!(back, m, "{}", path.display());
        assert_eq!(serialize_manifest(&back), once, "{}", path.display());
    }
}

#[test]
fn generated_fixtures_are_already_canonical() {
    for name in [
        "table3.json",
        "table7.json",
        "table8.json",
        "weighted.json",
        "transfer_learning.json",
    ] {
        let bytes = std::fs::read(fixture(name)).unwrap();
        assert_eq!(serialize_manifest(&parse_manifest(&bytes).unwrap()), bytes, "{name}");
    }
}

#[test]
fn clean_fixtures_have_no_findings() {
    for name in [
        "table3.json",
        "table4.json",
        "table5.json",
        "table6.json",
        "table7.json",
        "table8.json",
    ] {
        let m = parse_manifest(&std::fs::read(fixture(name)).unwrap()).unwrap();
        let report = validate_manifest(&m, true);
        assert!(report.ok && report.warnings.is_empty(), "{name}: {report:?}");
    }
}

#[test]
fn negative_fixtures_hit_their_code() {
    let structural = [
        ("bad_cycle.json", Code::Cycle),
        ("bad_no_subject.json", Code::NoSubject),
        ("bad_multi_subject.json", Code::MultiSubject),
        ("bad_dangling_edge.json", Code::DanglingEdge),
        ("bad_orphan.json", Code::Orphan),
        ("bad_dup_id.json", Code::DupId),
        ("bad_range.json", Code::Range),
        ("bad_not_integer.json", Code::NotInteger),
        ("bad_missing_criterion.json", Code::MissingCriterion),
        ("bad_missing_judgement.json", Code::MissingJudgement),
        ("bad_weights.json", Code::BadWeights),
        ("bad_no_leaves.json", Code::NoLeaves),
    ];
    for (name, code) in structural {
        let m = parse_manifest(&std::fs::read(fixture(name)).unwrap()).unwrap();
        let report = validate_manifest(&m, false);
        let codes: Vec<_> = report.errors.iter().map(|d| d.code).collect();
        assert_eq!(codes, [code], "{name}");
    }
    for (name, code) in [
        ("bad_syntax.json", Code::Syntax),
        ("bad_schema.json", Code::Schema),
        ("bad_version.json", Code::Version),
    ] {
        let err = parse_manifest(&std::fs::read(fixture(name)).unwrap()).unwrap_err();
        assert_eq!(err.code, code, "{name}");
    }
}

#[test]
fn internal_judgement_fixture() {
    let m = parse_manifest(&std::fs::read(fixture("warn_internal_judgement.json")).unwrap()).unwrap();
    let lax = validate_manifest(&m, false);
    assert!(lax.ok);
    assert_eq!(
        lax.warnings.iter().map(|d| d.code).collect::<Vec<_>>(),
        [Code::InternalJudgement]
    );
    let strict = validate_manifest(&m, true);
    assert_eq!(
        strict.errors.iter().map(|d| d.code).collect::<Vec<_>>(),
        [Code::InternalJudgement]
    );
}

#[test]
fn sub_manifest_is_reported_not_merged() {
    let compiled = common::compiled("transfer_learning.json");
    let basis = compiled.chain.node("MB").unwrap();
    assert_eq!(basis.sub_manifest.as_deref(), Some("basis_model.json"));
    assert!(compiled.chain.is_leaf("MB"));
    // the referenced manifest is a complete manifest in its own right
    common::compiled("basis_model.json");
}
