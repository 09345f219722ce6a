/// The two Hankel asymptotic series of `J_nu`/`Y_nu` for large argument,
/// truncated just before their smallest term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HankelPQ {
    /// `P(nu, z) = sum_k (-1)^k a_{2k}(nu) / z^{2k}`
    pub p: f64,
    /// `Q(nu, z) = sum_k (-1)^k a_{2k+1}(nu) / z^{2k+1}`
    pub q: f64,
    /// `P - 1`, summed separately to avoid cancellation.
    pub p_minus_one: f64,
    /// Magnitude of the first omitted term.
    pub err: f64,
    pub terms: usize,
}

/// Hankel coefficients `a_k(nu) / z^k` with `a_0 = 1`,
/// `a_k = a_{k-1} (4 nu^2 - (2k-1)^2) / (8k)`.
pub fn hankel_pq(nu: f64, z: f64) -> HankelPQ {
    let mu = 4.0 * nu * nu;
    let mut p_tail = 0.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    let err;
    let mut k = 1usize;
    loop {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (8.0 * k as f64 * z);
        let mag = term.abs();
        if mag == 0.0 {
            err = 0.0;
            break;
        }
        if mag >= prev || k > 400 {
            err = mag;
            break;
        }
        // sign pattern (-1)^{floor(k/2)}
        let signed = if (k / 2) % 2 == 0 { term } else { -term };
        if k % 2 == 0 {
            p_tail += signed;
        } else {
            q += signed;
        }
        if mag < 1e-17 * (1.0 + q.abs()) {
            err = mag;
            break;
        }
        prev = mag;
        k += 1;
    }
    HankelPQ { p: 1.0 + p_tail, q, p_minus_one: p_tail, err, terms: k }
}

/// The raw coefficients `a_0(nu), ..., a_{count-1}(nu)`.
pub fn hankel_coefficients(nu: f64, count: usize) -> Vec<f64> {
    let mu = 4.0 * nu * nu;
    let mut a = Vec::with_capacity(count);
    let mut cur = 1.0;
    for k in 0..count {
        if k > 0 {
            let odd = (2 * k - 1) as f64;
            cur *= (mu - odd * odd) / (8.0 * k as f64);
        }
        a.push(cur);
    }
    a
}

/// `(J_nu(z), Y_nu(z), error)` from the Hankel expansion with the phase
/// `w = z - nu pi/2 - pi/4` supplied by the caller.
pub(crate) fn hankel_jy(nu: f64, z: f64, w: f64) -> (f64, f64, f64) {
    let h = hankel_pq(nu, z);
    let amp = (2.0 / (std::f64::consts::PI * z)).sqrt();
    let (s, c) = w.sin_cos();
    let j = amp * (h.p * c - h.q * s);
    let y = amp * (h.p * s + h.q * c);
    let err = amp * (h.err + 4.0 * f64::EPSILON);
    (j, y, err)
}
