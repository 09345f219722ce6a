use super::RationalPolynomial;

fn three_term(n: usize, p0: RationalPolynomial, p1: RationalPolynomial) -> RationalPolynomial {
    if n == 0 {
        return p0;
    }
    let two_x = RationalPolynomial::from_integers(&[0, 2]);
    let (mut prev, mut cur) = (p0, p1);
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev polynomial of the first kind, `T_0 = 1`, `T_1 = x`.
pub fn chebyshev_t(n: usize) -> RationalPolynomial {
    three_term(
        n,
        RationalPolynomial::from_integers(&[1]),
        RationalPolynomial::from_integers(&[0, 1]),
    )
}

/// Chebyshev polynomial of the second kind, `U_0 = 1`, `U_1 = 2x`.
pub fn chebyshev_u(n: usize) -> RationalPolynomial {
    three_term(
        n,
        RationalPolynomial::from_integers(&[1]),
        RationalPolynomial::from_integers(&[0, 2]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        assert_eq!(chebyshev_t(2), RationalPolynomial::from_integers(&[-1, 0, 2]));
        assert_eq!(chebyshev_u(2), RationalPolynomial::from_integers(&[-1, 0, 4]));
        assert_eq!(chebyshev_u(3), RationalPolynomial::from_integers(&[0, -4, 0, 8]));
        assert!(chebyshev_u(9).has_integer_coefficients());
    }
}
