//! Specialized counter for alternating permutations with a forced top block.
//!
//! `Alt_Hoch(s, r)` counts the alternating permutations of `{1, ..., s+r}`
//! in which the top `r` values `s+1, ..., s+r` appear in decreasing order of
//! value from left to right. Scaled by binomial coefficients these counts
//! assemble the Betti numbers of Hochschild building sets in closed form, far
//! beyond the reach of the generic backtracking counter.
//!
//! The counter places values from largest to smallest. Under that insertion
//! order a full placement is alternating exactly when every valley (even
//! position) is filled after both of its neighbors, and the top block's
//! positions are visited left to right — which forces the top block to
//! occupy peaks (odd positions), except that the final position `L` may
//! carry the smallest top value when position `L-1` does too. Summing over
//! the admissible top-position sets reduces the bottom phase to independent
//! runs of consecutive free positions, each a small linear-extension count,
//! interleaved by a multinomial.

/// Largest supported value of `s + r`. Counts stay well inside `u64` here
/// because the bottom phase permutes only `s <= 14` values.
pub const MAX_TOTAL: u32 = 28;

/// Number of alternating permutations of `{1, ..., s+r}` whose top `r`
/// values appear in decreasing order. Zero for odd `s + r`, and zero
/// whenever `r > s + 2` (there are only `(s+r)/2 + 1` admissible top
/// positions).
pub fn count_alt_hoch(s: u32, r: u32) -> u64 {
    let l = s + r;
    assert!(l <= MAX_TOTAL, "s + r = {l} exceeds the supported bound {MAX_TOTAL}");
    assert!(s <= 14, "s = {s} exceeds the supported bound 14");
    if l == 0 {
        return 1;
    }
    if l % 2 == 1 {
        return 0;
    }
    let odds: Vec<u32> = (1..l).step_by(2).collect();
    let mut total: u64 = 0;
    for omask in 0u32..(1 << odds.len()) {
        let chosen = omask.count_ones();
        let positions = |with_last: bool| -> u64 {
            let mut q = 0u64;
            for (i, &p) in odds.iter().enumerate() {
                if omask & (1 << i) != 0 {
                    q |= 1 << (p - 1);
                }
            }
            if with_last {
                q |= 1 << (l - 1);
            }
            q
        };
        if chosen == r {
            total = total
                .checked_add(bottom_orders(l, positions(false), s))
                .expect("count overflow");
        }
        // The last position may join the top block only when L-1 is a peak
        // of the block: the valley L is then filled right after L-1.
        if r > 0 && chosen == r - 1 && omask & (1 << (odds.len() - 1)) != 0 {
            total = total
                .checked_add(bottom_orders(l, positions(true), s))
                .expect("count overflow");
        }
    }
    total
}

/// Number of orders in which the `s` free positions (those not in `q`) can
/// be filled by the bottom values so that every free valley comes after its
/// free neighbors. Free positions split into maximal consecutive runs that
/// constrain only themselves; runs interleave multinomially.
fn bottom_orders(l: u32, q: u64, s: u32) -> u64 {
    let mut runs: Vec<(u32, u32)> = Vec::new();
    let mut start = None;
    for p in 1..=l {
        let free = q & (1 << (p - 1)) == 0;
        match (free, start) {
            (true, None) => start = Some(p),
            (false, Some(a)) => {
                runs.push((a, p - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(a) = start {
        runs.push((a, l));
    }
    let mut remaining = s as u64;
    let mut result = 1u64;
    for &(a, b) in &runs {
        let len = (b - a + 1) as u64;
        result = result
            .checked_mul(binomial(remaining, len))
            .and_then(|r| r.checked_mul(fence_extensions(a, b)))
            .expect("count overflow");
        remaining -= len;
    }
    debug_assert_eq!(remaining, 0);
    result
}

/// Linear extensions of one run `a..=b` of consecutive positions: orders in
/// which each even position is placed after its neighbors inside the run.
fn fence_extensions(a: u32, b: u32) -> u64 {
    let len = (b - a + 1) as usize;
    assert!(len <= 20, "run of {len} free positions is too long");
    let full = (1usize << len) - 1;
    let mut g = vec![0u64; full + 1];
    g[0] = 1;
    for mask in 0..=full {
        if g[mask] == 0 {
            continue;
        }
        for i in 0..len {
            if mask & (1 << i) != 0 {
                continue;
            }
            let p = a + i as u32;
            if p % 2 == 0 {
                let left_missing = i > 0 && mask & (1 << (i - 1)) == 0;
                let right_missing = i + 1 < len && mask & (1 << (i + 1)) == 0;
                if left_missing || right_missing {
                    continue;
                }
            }
            g[mask | (1 << i)] += g[mask];
        }
    }
    g[full]
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}
