//! Closed-form and recurrence counts for the supported families.
//!
//! These are independent of the enumerators in [`crate::families`], which
//! makes them usable as oracles against enumeration lengths.

/// Binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc holds C(n, i) before the multiply
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// n! for small n.
pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Number of involutions of [n], via I(n) = I(n-1) + (n-1) * I(n-2).
pub fn involution_count(n: u64) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64); // I(0), I(1)
    for i in 2..=n {
        let next = cur + (i - 1) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Bell number B(n), via B(n) = sum_j C(n-1, j) * B(j).
pub fn bell_number(n: u64) -> u64 {
    let mut bell = vec![1u64; n as usize + 1];
    for i in 1..=n as usize {
        bell[i] = (0..i)
            .map(|j| binomial(i as u64 - 1, j as u64) * bell[j])
            .sum();
    }
    bell[n as usize]
}
