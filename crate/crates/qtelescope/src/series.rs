//! Exact truncated formal power series in q, and in a and q, with integer
//! coefficients.
//!
//! A [`QSeries`] holds the coefficients of q^0 .. q^N exactly; an [`AQSeries`]
//! holds a grid of coefficients of a^d q^j for d <= M, j <= N. Arithmetic
//! truncates eagerly: the result order is the minimum of the operand orders, so
//! every stored coefficient is exact. Division is only ever by series with
//! constant term 1 or -1, which keeps all arithmetic in the integers.
//!
//! The module also constructs the named series the verification commands talk
//! about: both sides of Watson's identity
//!
//! ```text
//! sum_{k>=0} (-1)^k (1 - a q^{2k}) a^{2k} q^{k(5k-1)/2} / ((q;q)_k (a q^k;q)_inf)
//!     = sum_{n>=0} a^n q^{n^2} / (q;q)_n ,
//! ```
//!
//! the bivariate left side of Sylvester's identity, the bilateral sum
//! `sum_{k in Z} (-1)^k q^{k(5k-1)/2}` from Schur's form of the first
//! Rogers-Ramanujan identity, and the Rogers-Ramanujan sum and product sides.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Failures of series arithmetic.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SeriesError {
    /// Inversion requires the constant term (constant cell) to be 1 or -1.
    #[error("series is not invertible: constant term must be 1 or -1")]
    NotUnit,
    /// `(a^0 q^0; q)_inf` contains the factor (1 - 1) = 0.
    #[error("infinite product diverges: leading factor vanishes at d = 0, e = 0")]
    Divergent,
}

/// A formal power series in q truncated at a fixed order, with exact integer
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigInt>, // len = order + 1
}

impl QSeries {
    /// Builds a series from coefficients of q^0 .. q^N.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the constant term");
        QSeries { coeffs }
    }

    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    /// The constant 1 truncated at `order`.
    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `coeff * q^exp` truncated at `order` (zero if `exp > order`).
    pub fn monomial(coeff: BigInt, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff;
        }
        s
    }

    /// The truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^i, which must be within the truncation window.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    /// All stored coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// True when every stored coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigInt::is_zero)
    }

    /// Restricts to a smaller truncation order.
    pub fn truncate(&self, order: usize) -> QSeries {
        assert!(order <= self.order(), "truncation cannot extend a series");
        QSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    fn zip_orders(&self, rhs: &QSeries) -> usize {
        self.order().min(rhs.order())
    }

    /// Sum, truncated to the smaller operand order.
    pub fn add(&self, rhs: &QSeries) -> QSeries {
        let n = self.zip_orders(rhs);
        QSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect() }
    }

    /// Difference, truncated to the smaller operand order.
    pub fn sub(&self, rhs: &QSeries) -> QSeries {
        let n = self.zip_orders(rhs);
        QSeries { coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect() }
    }

    /// Negation.
    pub fn neg(&self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Cauchy product, truncated to the smaller operand order.
    pub fn mul(&self, rhs: &QSeries) -> QSeries {
        let n = self.zip_orders(rhs);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs }
    }

    /// Multiplication by q^e (coefficients above the order fall away).
    pub fn shift(&self, e: usize) -> QSeries {
        let n = self.order();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for i in 0..=n.saturating_sub(e) {
            if e + i <= n {
                coeffs[e + i] = self.coeffs[i].clone();
            }
        }
        QSeries { coeffs }
    }

    /// Multiplication by an integer scalar.
    pub fn scale(&self, c: &BigInt) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplicative inverse; the constant term must be 1 or -1.
    pub fn invert(&self) -> Result<QSeries, SeriesError> {
        let u0 = &self.coeffs[0];
        if !u0.is_one() && !(-u0).is_one() {
            return Err(SeriesError::NotUnit);
        }
        let n = self.order();
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = u0.clone(); // u0 is its own inverse
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &inv[m - j];
                }
            }
            inv[m] = -(u0 * acc);
        }
        Ok(QSeries { coeffs: inv })
    }

    /// The finite product `(q;q)_k = (1-q)(1-q^2)...(1-q^k)`.
    pub fn poch(k: usize, order: usize) -> QSeries {
        let mut p = Self::one(order);
        for i in 1..=k.min(order) {
            p = p.sub(&p.shift(i));
        }
        p
    }

    /// The infinite product `(q;q)_inf`, exact to the truncation order.
    pub fn poch_inf(order: usize) -> QSeries {
        Self::poch(order, order)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{}]", self)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut printed = 0usize;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if printed == 12 {
                write!(f, " + ...")?;
                break;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}*q^{i}")?,
            }
            printed += 1;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// A formal power series in a and q, truncated at a-order M and q-order N.
/// Row d holds the q-series coefficient of a^d.
#[derive(Clone, PartialEq, Eq)]
pub struct AQSeries {
    rows: Vec<QSeries>, // len = a_order + 1, all rows share one q-order
}

impl AQSeries {
    /// Builds a grid from rows (coefficient q-series of a^0 .. a^M).
    pub fn new(rows: Vec<QSeries>) -> Self {
        assert!(!rows.is_empty(), "a grid stores at least the a^0 row");
        let n = rows[0].order();
        assert!(rows.iter().all(|r| r.order() == n), "rows must share one q-order");
        AQSeries { rows }
    }

    /// The zero grid.
    pub fn zero(a_order: usize, q_order: usize) -> Self {
        AQSeries { rows: vec![QSeries::zero(q_order); a_order + 1] }
    }

    /// The constant 1.
    pub fn one(a_order: usize, q_order: usize) -> Self {
        let mut s = Self::zero(a_order, q_order);
        s.rows[0] = QSeries::one(q_order);
        s
    }

    /// Embeds a q-series as the a^0 row.
    pub fn from_q(row0: QSeries, a_order: usize) -> Self {
        let q_order = row0.order();
        let mut s = Self::zero(a_order, q_order);
        s.rows[0] = row0;
        s
    }

    /// The a-truncation order M.
    pub fn a_order(&self) -> usize {
        self.rows.len() - 1
    }

    /// The q-truncation order N.
    pub fn q_order(&self) -> usize {
        self.rows[0].order()
    }

    /// The coefficient q-series of a^d.
    pub fn row(&self, d: usize) -> &QSeries {
        &self.rows[d]
    }

    /// True when every cell vanishes.
    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(QSeries::is_zero)
    }

    /// Restricts to smaller truncation orders.
    pub fn truncate(&self, a_order: usize, q_order: usize) -> AQSeries {
        assert!(a_order <= self.a_order() && q_order <= self.q_order());
        AQSeries { rows: self.rows[..=a_order].iter().map(|r| r.truncate(q_order)).collect() }
    }

    fn zip_orders(&self, rhs: &AQSeries) -> (usize, usize) {
        (self.a_order().min(rhs.a_order()), self.q_order().min(rhs.q_order()))
    }

    /// Sum, truncated to the smaller operand orders.
    pub fn add(&self, rhs: &AQSeries) -> AQSeries {
        let (m, n) = self.zip_orders(rhs);
        AQSeries {
            rows: (0..=m).map(|d| self.rows[d].truncate(n).add(&rhs.rows[d].truncate(n))).collect(),
        }
    }

    /// Difference, truncated to the smaller operand orders.
    pub fn sub(&self, rhs: &AQSeries) -> AQSeries {
        let (m, n) = self.zip_orders(rhs);
        AQSeries {
            rows: (0..=m).map(|d| self.rows[d].truncate(n).sub(&rhs.rows[d].truncate(n))).collect(),
        }
    }

    /// Negation.
    pub fn neg(&self) -> AQSeries {
        AQSeries { rows: self.rows.iter().map(QSeries::neg).collect() }
    }

    /// Product, truncated to the smaller operand orders.
    #[allow(clippy::needless_range_loop)]
    pub fn mul(&self, rhs: &AQSeries) -> AQSeries {
        let (m, n) = self.zip_orders(rhs);
        let mut rows = vec![QSeries::zero(n); m + 1];
        for d in 0..=m {
            for i in 0..=d {
                let (u, v) = (&self.rows[i], &rhs.rows[d - i]);
                if u.is_zero() || v.is_zero() {
                    continue;
                }
                rows[d] = rows[d].add(&u.truncate(n).mul(&v.truncate(n)));
            }
        }
        AQSeries { rows }
    }

    /// Multiplies every row by a plain q-series.
    pub fn mul_q(&self, qs: &QSeries) -> AQSeries {
        let n = self.q_order().min(qs.order());
        let qs = qs.truncate(n);
        AQSeries { rows: self.rows.iter().map(|r| r.truncate(n).mul(&qs)).collect() }
    }

    /// Multiplication by the monomial `a^da q^dq`.
    #[allow(clippy::needless_range_loop)]
    pub fn shift(&self, da: usize, dq: usize) -> AQSeries {
        let (m, n) = (self.a_order(), self.q_order());
        let mut rows = vec![QSeries::zero(n); m + 1];
        for d in da..=m {
            rows[d] = self.rows[d - da].shift(dq);
        }
        AQSeries { rows }
    }

    /// Multiplication by an integer scalar.
    pub fn scale(&self, c: &BigInt) -> AQSeries {
        AQSeries { rows: self.rows.iter().map(|r| r.scale(c)).collect() }
    }

    /// The substitution `a -> a q^j`: row d picks up the factor q^{d j}.
    pub fn scale_a(&self, j: usize) -> AQSeries {
        AQSeries {
            rows: self.rows.iter().enumerate().map(|(d, r)| r.shift(d * j)).collect(),
        }
    }

    /// Multiplicative inverse; the constant cell a^0 q^0 must be 1 or -1.
    pub fn invert(&self) -> Result<AQSeries, SeriesError> {
        let inv0 = self.rows[0].invert()?;
        let m = self.a_order();
        let mut rows = Vec::with_capacity(m + 1);
        rows.push(inv0.clone());
        for d in 1..=m {
            let mut acc = QSeries::zero(self.q_order());
            for j in 1..=d {
                if !self.rows[j].is_zero() {
                    acc = acc.add(&self.rows[j].mul(&rows[d - j]));
                }
            }
            rows.push(acc.mul(&inv0).neg());
        }
        Ok(AQSeries { rows })
    }

    /// The infinite product `(a^d q^e; q)_inf = prod_{i>=0} (1 - a^d q^{e+i})`,
    /// exact on the truncation grid. Fails when d = e = 0.
    pub fn poch_inf(d: usize, e: usize, a_order: usize, q_order: usize) -> Result<AQSeries, SeriesError> {
        if d == 0 && e == 0 {
            return Err(SeriesError::Divergent);
        }
        let mut p = Self::one(a_order, q_order);
        if d > a_order {
            return Ok(p); // every factor is 1 on the grid
        }
        for ex in e..=q_order {
            p = p.sub(&p.shift(d, ex));
        }
        Ok(p)
    }

    /// The specialization a = 1, summing all rows. Exact to q-order N only
    /// when the dropped rows d > M carry no coefficients of degree <= N.
    pub fn specialize_a_one(&self) -> QSeries {
        let mut s = QSeries::zero(self.q_order());
        for r in &self.rows {
            s = s.add(r);
        }
        s
    }
}

impl fmt::Debug for AQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "AQSeries (a-order {}, q-order {})", self.a_order(), self.q_order())?;
        for (d, r) in self.rows.iter().enumerate() {
            writeln!(f, "  a^{d}: {r}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct AQSeriesRepr {
    a_order: usize,
    q_order: usize,
    rows: Vec<Vec<String>>,
}

impl Serialize for AQSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = AQSeriesRepr {
            a_order: self.a_order(),
            q_order: self.q_order(),
            rows: self
                .rows
                .iter()
                .map(|r| r.coeffs().iter().map(BigInt::to_string).collect())
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AQSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = AQSeriesRepr::deserialize(deserializer)?;
        if repr.rows.len() != repr.a_order + 1 {
            return Err(D::Error::custom("row count must be a_order + 1"));
        }
        let mut rows = Vec::with_capacity(repr.rows.len());
        for row in &repr.rows {
            if row.len() != repr.q_order + 1 {
                return Err(D::Error::custom("row length must be q_order + 1"));
            }
            let coeffs = row
                .iter()
                .map(|s| s.parse::<BigInt>().map_err(|_| D::Error::custom("bad integer")))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(QSeries::new(coeffs));
        }
        Ok(AQSeries::new(rows))
    }
}

/// The right side of Watson's identity, `sum_n a^n q^{n^2} / (q;q)_n`.
pub fn watson_rhs(a_order: usize, q_order: usize) -> AQSeries {
    let mut rows = Vec::with_capacity(a_order + 1);
    for n in 0..=a_order {
        if n * n > q_order {
            rows.push(QSeries::zero(q_order));
        } else {
            let inv = QSeries::poch(n, q_order).invert().expect("(q;q)_n has constant term 1");
            rows.push(inv.shift(n * n));
        }
    }
    AQSeries::new(rows)
}

/// The k-th term of the left side of Watson's identity,
/// `(-1)^k (1 - a q^{2k}) a^{2k} q^{k(5k-1)/2} / ((q;q)_k (a q^k;q)_inf)`.
pub fn watson_summand(k: usize, a_order: usize, q_order: usize) -> AQSeries {
    let poch_inv = QSeries::poch(k, q_order).invert().expect("(q;q)_k has constant term 1");
    let inf = AQSeries::poch_inf(1, k, a_order, q_order).expect("d = 1 never diverges");
    let base = inf.invert().expect("(a q^k;q)_inf has constant cell 1").mul_q(&poch_inv);
    let t = base.sub(&base.shift(1, 2 * k));
    let t = t.shift(2 * k, k * (5 * k).saturating_sub(1) / 2);
    if k % 2 == 1 {
        t.neg()
    } else {
        t
    }
}

/// The left side of Watson's identity, summed until terms leave the grid.
pub fn watson_lhs(a_order: usize, q_order: usize) -> AQSeries {
    let mut sum = AQSeries::zero(a_order, q_order);
    let mut k = 0usize;
    while 2 * k <= a_order && k * (5 * k).saturating_sub(1) / 2 <= q_order {
        sum = sum.add(&watson_summand(k, a_order, q_order));
        k += 1;
    }
    sum
}

/// The k-th term of the left side of Sylvester's identity,
/// `(-1)^k q^{k(3k+1)/2} x^k (1 - x q^{2k+1}) / ((q;q)_k (x q^{k+1};q)_inf)`,
/// with x stored in the a-slot of the grid.
pub fn sylvester_summand(k: usize, x_order: usize, q_order: usize) -> AQSeries {
    let poch_inv = QSeries::poch(k, q_order).invert().expect("(q;q)_k has constant term 1");
    let inf = AQSeries::poch_inf(1, k + 1, x_order, q_order).expect("d = 1 never diverges");
    let base = inf.invert().expect("(x q^{k+1};q)_inf has constant cell 1").mul_q(&poch_inv);
    let t = base.sub(&base.shift(1, 2 * k + 1));
    let t = t.shift(k, k * (3 * k + 1) / 2);
    if k % 2 == 1 {
        t.neg()
    } else {
        t
    }
}

/// The left side of Sylvester's identity; the identity says this is 1.
pub fn sylvester_lhs(x_order: usize, q_order: usize) -> AQSeries {
    let mut sum = AQSeries::zero(x_order, q_order);
    let mut k = 0usize;
    while k <= x_order && k * (3 * k + 1) / 2 <= q_order {
        sum = sum.add(&sylvester_summand(k, x_order, q_order));
        k += 1;
    }
    sum
}

/// The bilateral sum `sum_{k in Z} (-1)^k q^{k(5k-1)/2}`; nonzero exponents
/// come in the pairs k(5k-1)/2 and k(5k+1)/2: 2, 3, 9, 11, 21, 24, ...
pub fn schur_bilateral(q_order: usize) -> QSeries {
    let mut coeffs = vec![BigInt::zero(); q_order + 1];
    coeffs[0] = BigInt::one();
    let mut k = 1usize;
    while k * (5 * k - 1) / 2 <= q_order {
        let sign = if k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        coeffs[k * (5 * k - 1) / 2] += &sign; // index k
        let neg_exp = k * (5 * k + 1) / 2; // index -k
        if neg_exp <= q_order {
            coeffs[neg_exp] += &sign;
        }
        k += 1;
    }
    QSeries::new(coeffs)
}

/// The Rogers-Ramanujan product side: for `which = 1` the product
/// `prod 1/((1-q^{5j+1})(1-q^{5j+4}))`, for `which = 2` the product
/// `prod 1/((1-q^{5j+2})(1-q^{5j+3}))`.
pub fn rr_product(which: u8, q_order: usize) -> QSeries {
    assert!(which == 1 || which == 2, "which must be 1 or 2");
    let residues: [usize; 2] = if which == 1 { [1, 4] } else { [2, 3] };
    let mut denom = QSeries::one(q_order);
    for j in 1..=q_order {
        if residues.contains(&(j % 5)) {
            denom = denom.sub(&denom.shift(j));
        }
    }
    denom.invert().expect("product has constant term 1")
}

/// The Rogers-Ramanujan sum side: `sum_n q^{n^2}/(q;q)_n` for `which = 1`,
/// `sum_n q^{n^2+n}/(q;q)_n` for `which = 2`.
pub fn rr_sum(which: u8, q_order: usize) -> QSeries {
    assert!(which == 1 || which == 2, "which must be 1 or 2");
    let mut s = QSeries::zero(q_order);
    let mut n = 0usize;
    loop {
        let exp = if which == 1 { n * n } else { n * n + n };
        if exp > q_order {
            break;
        }
        let inv = QSeries::poch(n, q_order).invert().expect("(q;q)_n has constant term 1");
        s = s.add(&inv.shift(exp));
        n += 1;
    }
    s
}
