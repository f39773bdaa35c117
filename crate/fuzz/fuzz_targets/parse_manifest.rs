// SPDX-License-Identifier: Apache-2.0
#![no_main]

use libfuzzer_sys::fuzz_target;
use vistrace::parse_manifest;

fuzz_target!(|data: &[u8]| {
    if let Err(d) = parse_manifest(data) {
        assert!(d.code.is_parse_level(), "parse raised {}", d.code);
    }
});
