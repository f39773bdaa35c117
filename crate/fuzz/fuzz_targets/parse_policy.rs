// SPDX-License-Identifier: Apache-2.0
#![no_main]

use libfuzzer_sys::fuzz_target;
use vistrace::parse_policy;

fuzz_target!(|data: &[u8]| {
    if let Ok(policy) = parse_policy(data) {
        assert!(0 < policy.fresh_window_days() && policy.fresh_window_days() < policy.stale_window_days());
    }
});
