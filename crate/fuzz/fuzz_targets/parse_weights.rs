// SPDX-License-Identifier: Apache-2.0
#![no_main]

use libfuzzer_sys::fuzz_target;
use vistrace::parse_weights;

fuzz_target!(|data: &[u8]| {
    if let Ok(weights) = parse_weights(data) {
        let ids: Vec<_> = weights.iter().map(|(id, _)| id).collect();
        let _ = weights.problems(&ids);
    }
});
