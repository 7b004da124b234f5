//! Exact integer helpers: gcd/extended gcd, modular inverses, Möbius and
//! prime sieves, divisor enumeration.

/// Non-negative gcd.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// gcd of three values.
pub fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    gcd(gcd(a, b), c)
}

/// Least common multiple (non-negative, inputs must not both be 0).
pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).abs() * b.abs()
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g = gcd(a,b), g >= 0.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Multiplicative inverse of `a` modulo `m` (m >= 1), if it exists.
/// Result lies in [0, m).
pub fn mod_inv(a: i64, m: i64) -> Option<i64> {
    debug_assert!(m >= 1);
    if m == 1 {
        return Some(0);
    }
    let a = a.rem_euclid(m);
    let (g, x, _) = ext_gcd(a, m);
    if g != 1 {
        None
    } else {
        Some(x.rem_euclid(m))
    }
}

/// Solve x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2.
/// Returns the unique solution in [0, m1*m2).
pub fn crt(r1: i64, m1: i64, r2: i64, m2: i64) -> Option<i64> {
    let (g, p, _q) = ext_gcd(m1, m2);
    if g != 1 {
        return None;
    }
    let m = m1 * m2;
    // x = r1 + m1 * p * (r2 - r1) mod m
    let diff = (r2 - r1).rem_euclid(m2);
    let t = (p.rem_euclid(m2) * diff).rem_euclid(m2);
    Some((r1 + m1 * t).rem_euclid(m))
}

/// Möbius function values mu(0..=n); mu[0] is unused (set to 0).
pub fn moebius_sieve(n: usize) -> Vec<i8> {
    let mut mu = vec![1i8; n + 1];
    if n == 0 {
        return vec![0];
    }
    mu[0] = 0;
    let mut is_comp = vec![false; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    for i in 2..=n {
        if !is_comp[i] {
            primes.push(i);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            is_comp[ip] = true;
            if i % p == 0 {
                mu[ip] = 0;
                break;
            } else {
                mu[ip] = -mu[i];
            }
        }
    }
    mu
}

/// Primes up to `n` inclusive.
pub fn primes_up_to(n: usize) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// All positive divisors of n (unsorted order of generation, then sorted).
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Möbius function of a single value by trial division.
pub fn moebius(mut n: u64) -> i64 {
    assert!(n >= 1);
    let mut mu = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_bezout() {
        for a in -30i64..30 {
            for b in -30i64..30 {
                let (g, x, y) = ext_gcd(a, b);
                assert_eq!(g, gcd(a, b));
                assert_eq!(a * x + b * y, g, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn mod_inv_works() {
        for m in 1i64..60 {
            for a in 0..m {
                match mod_inv(a, m) {
                    Some(inv) => {
                        assert_eq!(gcd(a, m), 1);
                        if m > 1 {
                            assert_eq!((a * inv).rem_euclid(m), 1);
                        }
                    }
                    None => assert_ne!(gcd(a, m), 1),
                }
            }
        }
    }

    #[test]
    fn crt_agrees() {
        for m1 in 1i64..12 {
            for m2 in 1i64..12 {
                if gcd(m1, m2) != 1 {
                    continue;
                }
                for r1 in 0..m1 {
                    for r2 in 0..m2 {
                        let x = crt(r1, m1, r2, m2).unwrap();
                        assert_eq!(x % m1, r1);
                        assert_eq!(x % m2, r2);
                        assert!(x < m1 * m2);
                    }
                }
            }
        }
    }

    #[test]
    fn moebius_sieve_matches_single() {
        let mu = moebius_sieve(500);
        for n in 1..=500usize {
            assert_eq!(mu[n] as i64, moebius(n as u64), "n={n}");
        }
    }

    #[test]
    fn divisors_of_36() {
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }
}
