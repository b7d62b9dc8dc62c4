//! The size requirements of the extraction lemmas, as exact big-integer
//! functions. Comparisons against actual input sizes must never overflow,
//! whatever the parameters.

use num_bigint::BigUint;

fn big(x: usize) -> BigUint {
    BigUint::from(x)
}

/// Vertices guaranteeing a clique of size c or a stable set of size s: c^s.
pub fn ramsey_bound(c: usize, s: usize) -> BigUint {
    big(c).pow(s as u32)
}

/// Stable-side size feeding the alignment-or-constellation recursion:
/// a^(l-1) * (s + d(l-1)).
pub fn alignment_bound(a: usize, d: usize, s: usize, l: usize) -> BigUint {
    big(a).pow((l - 1) as u32) * (big(s) + big(d) * big(l - 1))
}

/// Stable-side size guaranteeing an alignment in a pinched graph:
/// a^(2cdh-1) * d * (h + 2cdh - 1).
pub fn pinched_alignment_bound(a: usize, c: usize, d: usize, h: usize) -> BigUint {
    let e = 2 * c * d * h;
    big(a).pow((e - 1) as u32) * big(d) * (big(h) + big(e - 1))
}

/// Path count guaranteeing a t-meager (s,l)-sub-constellation or a
/// biclique: l + (st)^t.
pub fn meager_path_bound(s: usize, l: usize, t: usize) -> BigUint {
    big(l) + big(s * t).pow(t as u32)
}

/// Stable-side requirement of the array extraction, written sigma(c,h,s,t):
/// s^(2cht-1) * t * (h + 2cht - 1).
pub fn array_stable_bound(c: usize, h: usize, s: usize, t: usize) -> BigUint {
    let e = 2 * c * h * t;
    big(s).pow((e - 1) as u32) * big(t) * (big(h) + big(e - 1))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(big).product::<BigUint>().max(big(1))
}

/// Path-count requirement of the array extraction, written lambda(c,h,s,t):
/// c * s * s! * sigma^s + (sigma * t)^t.
pub fn array_path_bound(c: usize, h: usize, s: usize, t: usize) -> BigUint {
    let sigma = array_stable_bound(c, h, s, t);
    big(c) * big(s) * factorial(s) * sigma.pow(s as u32) + (sigma * big(t)).pow(t as u32)
}

/// Constellation size used by the block-side argument, written gamma(c,h,l):
/// (c(h+2))^(2chl-1) * l * (h + 2chl - 1).
pub fn scatter_bound(c: usize, h: usize, l: usize) -> BigUint {
    let e = 2 * c * h * l;
    big(c * (h + 2)).pow((e - 1) as u32) * big(l) * (big(h) + big(e - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alignment_bound_at_l_one_is_s() {
        for a in 1..5 {
            for d in 1..5 {
                for s in 1..9 {
                    assert_eq!(alignment_bound(a, d, s, 1), big(s));
                }
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(ramsey_bound(3, 2), big(9));
        assert_eq!(ramsey_bound(2, 4), big(16));
        // a=2,d=1,s=2,l=2: 2^1 * (2 + 1) = 6
        assert_eq!(alignment_bound(2, 1, 2, 2), big(6));
        // a=2,c=1,d=1,h=1: e=2, 2^1 * 1 * (1+1) = 4
        assert_eq!(pinched_alignment_bound(2, 1, 1, 1), big(4));
        // s=2,l=1,t=2: 1 + 4^2 = 17
        assert_eq!(meager_path_bound(2, 1, 2), big(17));
        // c=1,h=1,s=2,t=1: e=2, 2^1*1*(1+1) = 4
        assert_eq!(array_stable_bound(1, 1, 2, 1), big(4));
        // lambda(1,1,1,1): sigma = 1^1*1*(1+1) = 2; 1*1*1*4... 2^1=2 -> 1*1*1*2 + (2*1)^1 = 4
        assert_eq!(array_stable_bound(1, 1, 1, 1), big(2));
        assert_eq!(array_path_bound(1, 1, 1, 1), big(4));
        // gamma(1,1,1): e=2, (1*3)^1 * 1 * (1+1) = 6
        assert_eq!(scatter_bound(1, 1, 1), big(6));
    }

    #[test]
    fn monotone_in_each_parameter() {
        let grid = [1usize, 2, 3];
        for &a in &grid {
            for &b in &grid {
                for &c in &grid {
                    for &d in &grid {
                        assert!(ramsey_bound(a + 1, b) >= ramsey_bound(a, b));
                        assert!(ramsey_bound(a, b + 1) >= ramsey_bound(a, b));
                        assert!(alignment_bound(a + 1, b, c, d) >= alignment_bound(a, b, c, d));
                        assert!(alignment_bound(a, b + 1, c, d) >= alignment_bound(a, b, c, d));
                        assert!(alignment_bound(a, b, c + 1, d) >= alignment_bound(a, b, c, d));
                        assert!(alignment_bound(a, b, c, d + 1) >= alignment_bound(a, b, c, d));
                        assert!(
                            pinched_alignment_bound(a + 1, b, c, d)
                                >= pinched_alignment_bound(a, b, c, d)
                        );
                        assert!(
                            pinched_alignment_bound(a, b + 1, c, d)
                                >= pinched_alignment_bound(a, b, c, d)
                        );
                        assert!(
                            pinched_alignment_bound(a, b, c + 1, d)
                                >= pinched_alignment_bound(a, b, c, d)
                        );
                        assert!(
                            pinched_alignment_bound(a, b, c, d + 1)
                                >= pinched_alignment_bound(a, b, c, d)
                        );
                        assert!(array_stable_bound(a + 1, b, c, d) >= array_stable_bound(a, b, c, d));
                        assert!(array_path_bound(a, b + 1, c, d) >= array_path_bound(a, b, c, d));
                        assert!(scatter_bound(a + 1, b, c) >= scatter_bound(a, b, c));
                        assert!(scatter_bound(a, b + 1, c) >= scatter_bound(a, b, c));
                        assert!(scatter_bound(a, b, c + 1) >= scatter_bound(a, b, c));
                    }
                }
            }
        }
    }

    #[test]
    fn big_parameters_do_not_overflow() {
        let sigma = array_stable_bound(3, 3, 3, 3);
        assert!(sigma > BigUint::from(u64::MAX));
        let lambda = array_path_bound(3, 3, 3, 3);
        assert!(lambda > sigma);
    }
}
