// SPDX-License-Identifier: Apache-2.0
#![no_main]

use libfuzzer_sys::fuzz_target;
use vistrace::report::ScoreReport;
use vistrace::{chain_visibility, parse_manifest, validate_manifest, Mode};

fuzz_target!(|data: &[u8]| {
    let Ok(manifest) = parse_manifest(data) else {
        return;
    };
    let lax = validate_manifest(&manifest, false);
    let strict = validate_manifest(&manifest, true);
    assert!(lax.errors.iter().all(|e| strict.errors.contains(e)));

    let Ok(compiled) = manifest.compile(false) else {
        assert!(!lax.ok);
        return;
    };
    assert!(lax.ok);
    compiled.chain.revalidate().unwrap();
    for mode in [Mode::FullPrecision, Mode::PaperCompat] {
        let score = chain_visibility(&compiled.chain, compiled.weights.as_ref(), mode).unwrap();
        assert!((1.0..=4.0).contains(&score.vis), "vis {} out of range", score.vis);
        let _ = ScoreReport::new(&compiled.chain, &score).render_text(2);
    }
});
