// SPDX-License-Identifier: Apache-2.0
#![allow(dead_code)]

use std::path::PathBuf;

use vistrace::manifest::{read_manifest, Compiled};

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures().join(name)
}

pub fn compiled(name: &str) -> Compiled {
    read_manifest(&fixture(name)).unwrap().compile(false).unwrap()
}

/// Every manifest fixture that parses, i.e. excluding the deliberately
/// unparseable ones and the non-manifest policy/weights files.
pub fn parseable_manifests() -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(fixtures())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .filter(|p| {
            let name = p.file_name().unwrap().to_str().unwrap();
            !matches!(
                name,
                "bad_syntax.json"
                    | "bad_schema.json"
                    | "bad_version.json"
                    | "policy_quarterly.json"
                    | "weights_override.json"
            )
        })
        .collect();
    out.sort();
    out
}

/// Closed form of a leaf's visibility, independent of the library's
/// composition of square roots.
pub fn closed_form(q: u8, f: u8, a: u8) -> f64 {
    f64::from(q).powf(0.5) * f64::from(a).powf(0.25) * f64::from(f).powf(0.25)
}

pub fn all_triples() -> impl Iterator<Item = (u8, u8, u8)> {
    (1..=4u8).flat_map(|q| (1..=4u8).flat_map(move |f| (1..=4u8).map(move |a| (q, f, a))))
}
