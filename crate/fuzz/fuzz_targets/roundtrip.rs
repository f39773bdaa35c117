// SPDX-License-Identifier: Apache-2.0
#![no_main]

use libfuzzer_sys::fuzz_target;
use vistrace::{parse_manifest, serialize_manifest};

fuzz_target!(|data: &[u8]| {
    let Ok(manifest) = parse_manifest(data) else {
        return;
    };
    let once = serialize_manifest(&manifest);
    let back = parse_manifest(&once).expect("canonical output parses");
    assert_eq!(back, manifest);
    assert_eq!(serialize_manifest(&back), once);
});
