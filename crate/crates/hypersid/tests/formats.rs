use hypersid::format::{parse_hypergraph, write_hypergraph, HypergraphFile};
use hypersid::json::{CertificateJson, KernelJson};
use hypersid_core::analysis::{bound_tight_cycle, exponent_ratio};
use hypersid_core::constructions::{cycle, tight_cycle_partite};
use hypersid_core::domination::WeightedKernel;
use hypersid_core::exact::frac;
use hypersid_core::Hypergraph;
use proptest::prelude::*;
use serde_json::Value;

fn schema(name: &str) -> jsonschema::Validator {
    let path = format!("{}/schemas/{}", env!("CARGO_MANIFEST_DIR"), name);
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&value).unwrap()
}

#[test]
fn named_hypergraphs_survive_text() {
    let k3 = HypergraphFile::plain(Hypergraph::complete(2, 3));
    assert_eq!(parse_hypergraph(&write_hypergraph(&k3)).unwrap(), k3);
    let c6 = HypergraphFile::partite(&tight_cycle_partite(3, 6).unwrap());
    let text = write_hypergraph(&c6);
    assert!(text.starts_with("3 6 6\nparts "));
    assert_eq!(parse_hypergraph(&text).unwrap(), c6);
}

#[test]
fn comments_and_edge_order_are_ignored() {
    let a = parse_hypergraph("# triangle\n2 3 3 # header\n\n2 1\n0 2\n1 0\n").unwrap();
    assert_eq!(a.hypergraph, Hypergraph::complete(2, 3));
}

#[test]
fn duplicate_edges_cite_both_lines() {
    let e = parse_hypergraph("3 4 3\n0 1 2\n1 2 3\n2 1 0\n").unwrap_err();
    assert_eq!(e.line, 4);
    assert!(e.message.contains("first on line 2"), "{}", e);
}

#[test]
fn certificates_match_schema() {
    let v = schema("certificate.schema.json");
    let bound = serde_json::to_value(CertificateJson::bound(&bound_tight_cycle(2).unwrap())).unwrap();
    assert!(v.is_valid(&bound), "{}", bound);
    let w = exponent_ratio(&cycle(4).unwrap(), &Hypergraph::complete(2, 3), 10).unwrap();
    let witness = CertificateJson::witness(&w);
    let value = serde_json::to_value(&witness).unwrap();
    assert!(v.is_valid(&value));
    let back: CertificateJson = serde_json::from_value(value.clone()).unwrap();
    back.verify_witness().unwrap();

    let mut failed = bound.clone();
    failed["transcript"][0]["passed"] = Value::Bool(false);
    assert!(!v.is_valid(&failed));
    let mut forged = value;
    forged["p"] = 38.into();
    let forged: CertificateJson = serde_json::from_value(forged).unwrap();
    assert!(forged.verify_witness().is_err());
}

#[test]
fn kernels_match_schema() {
    let k = WeightedKernel::from_fn(3, 2, |m| frac(m.iter().sum::<u32>() as i64 - 1, 4)).unwrap();
    let value = serde_json::to_value(KernelJson::of(&k)).unwrap();
    assert!(schema("kernel.schema.json").is_valid(&value));
    let back: KernelJson = serde_json::from_value(value).unwrap();
    assert_eq!(back.to_kernel().unwrap(), k);
}

fn arb_file() -> impl Strategy<Value = HypergraphFile> {
    (1usize..=3, 0usize..=7).prop_flat_map(|(r, n)| {
        let n = n.max(r);
        let all = hypersid_core::extremal::all_edges(r, n);
        proptest::sample::subsequence(all.clone(), 0..=all.len())
            .prop_map(move |edges| HypergraphFile::plain(Hypergraph::new(r, n, edges).unwrap()))
    })
}

proptest! {
    #[test]
    fn text_format_is_lossless(file in arb_file()) {
        let text = write_hypergraph(&file);
        prop_assert_eq!(parse_hypergraph(&text).unwrap(), file.clone());
        let json = serde_json::to_string(&hypersid::json::HypergraphJson::of(&file.hypergraph)).unwrap();
        let back: hypersid::json::HypergraphJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_hypergraph().unwrap(), file.hypergraph);
    }
}
