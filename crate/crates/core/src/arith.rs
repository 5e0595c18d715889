//! Small modular-arithmetic helpers over `Z_k` with `k <= 64`.

use num_integer::Integer;

/// `gcd(a mod k, k) == 1`. Note `gcd(0, k) = k`, so zero is coprime only to 1.
pub fn is_coprime(a: u64, k: u8) -> bool {
    let k = u64::from(k);
    (a % k).gcd(&k) == 1
}

pub fn is_prime(k: u8) -> bool {
    if k < 2 {
        return false;
    }
    (2..k).take_while(|d| u16::from(*d) * u16::from(*d) <= u16::from(k)).all(|d| !k.is_multiple_of(d))
}

pub(crate) fn mul_mod(a: u8, b: u8, p: u8) -> u8 {
    ((u32::from(a) * u32::from(b)) % u32::from(p)) as u8
}

pub(crate) fn add_mod(a: u8, b: u8, p: u8) -> u8 {
    ((u32::from(a) + u32::from(b)) % u32::from(p)) as u8
}

pub(crate) fn sub_mod(a: u8, b: u8, p: u8) -> u8 {
    ((u32::from(a) + u32::from(p) - u32::from(b) % u32::from(p)) % u32::from(p)) as u8
}

pub(crate) fn pow_mod(base: u8, mut exp: u32, p: u8) -> u8 {
    let m = u32::from(p);
    let mut acc = 1 % m;
    let mut b = u32::from(base) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u8
}

/// Multiplicative inverse in GF(p) via Fermat; `p` must be prime and `a != 0 mod p`.
pub(crate) fn inv_mod(a: u8, p: u8) -> u8 {
    debug_assert!(is_prime(p) && !a.is_multiple_of(p));
    pow_mod(a, u32::from(p) - 2, p)
}
