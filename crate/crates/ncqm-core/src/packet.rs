//! Gaussian wavepackets, the common carrier for every representation here.
//!
//! A packet is A · exp(i k·r) · exp(−Σ_j (r_j − c_j)² / (2 w_j²)) in one or
//! two variables. Each unitary in this crate acts by a constant phase, an
//! r-linear phase and an argument translation, so the family is exactly
//! closed: only the amplitude, the wavevector and the centre move, never the
//! widths. Norms and inner products have closed forms.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SQRT_PI: f64 = 1.772_453_850_905_516;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPacket", into = "RawPacket")]
pub struct GaussianPacket {
    dim: usize,
    amplitude: Complex64,
    k: [f64; 2],
    c: [f64; 2],
    w: [f64; 2],
}

/// Wire form: `{"dim":2,"amplitude":[re,im],"k":[..],"c":[..],"w":[..]}`
/// with the vectors carrying exactly `dim` entries.
#[derive(Serialize, Deserialize)]
struct RawPacket {
    dim: usize,
    amplitude: [f64; 2],
    k: Vec<f64>,
    c: Vec<f64>,
    w: Vec<f64>,
}

impl TryFrom<RawPacket> for GaussianPacket {
    type Error = Error;
    fn try_from(raw: RawPacket) -> Result<Self> {
        if raw.k.len() != raw.dim || raw.c.len() != raw.dim || raw.w.len() != raw.dim {
            return Err(Error::BadDimension(raw.dim));
        }
        let amplitude = Complex64::new(raw.amplitude[0], raw.amplitude[1]);
        let pad = |v: &[f64], fill: f64| [v[0], v.get(1).copied().unwrap_or(fill)];
        GaussianPacket::new(raw.dim, amplitude, pad(&raw.k, 0.0), pad(&raw.c, 0.0), pad(&raw.w, 1.0))
    }
}

impl From<GaussianPacket> for RawPacket {
    fn from(p: GaussianPacket) -> Self {
        RawPacket {
            dim: p.dim,
            amplitude: [p.amplitude.re, p.amplitude.im],
            k: p.k[..p.dim].to_vec(),
            c: p.c[..p.dim].to_vec(),
            w: p.w[..p.dim].to_vec(),
        }
    }
}

impl GaussianPacket {
    /// Build a packet; dim must be 1 or 2 and every width positive. The
    /// unused second slot of a 1-D packet is normalised to k=c=0, w=1 so
    /// equality and serialization stay canonical.
    pub fn new(dim: usize, amplitude: Complex64, k: [f64; 2], c: [f64; 2], w: [f64; 2]) -> Result<Self> {
        if dim != 1 && dim != 2 {
            return Err(Error::BadDimension(dim));
        }
        for &width in &w[..dim] {
            // partial_cmp so a NaN width is rejected along with w ≤ 0
            if width.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
                return Err(Error::NonPositiveWidth(width));
            }
        }
        let mut packet = Self { dim, amplitude, k, c, w };
        if dim == 1 {
            packet.k[1] = 0.0;
            packet.c[1] = 0.0;
            packet.w[1] = 1.0;
        }
        Ok(packet)
    }

    pub fn new_1d(amplitude: Complex64, k: f64, c: f64, w: f64) -> Result<Self> {
        Self::new(1, amplitude, [k, 0.0], [c, 0.0], [w, 1.0])
    }

    pub fn new_2d(amplitude: Complex64, k: [f64; 2], c: [f64; 2], w: [f64; 2]) -> Result<Self> {
        Self::new(2, amplitude, k, c, w)
    }

    /// Unit-amplitude packet centred at the origin, all widths one.
    pub fn standard(dim: usize) -> Result<Self> {
        Self::new(dim, Complex64::new(1.0, 0.0), [0.0; 2], [0.0; 2], [1.0; 2])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitude(&self) -> Complex64 {
        self.amplitude
    }

    pub fn wavevector(&self) -> &[f64] {
        &self.k[..self.dim]
    }

    pub fn centre(&self) -> &[f64] {
        &self.c[..self.dim]
    }

    pub fn widths(&self) -> &[f64] {
        &self.w[..self.dim]
    }

    /// Apply a constant phase, an r-linear phase and an argument translation:
    /// the image of f under C e^{i u·r} f(r + d). The whole constant phase,
    /// including e^{i k·d} from the shift, is accumulated as one real
    /// exponent and applied as a single unit-modulus factor.
    pub(crate) fn transformed(&self, phase: f64, linear: [f64; 2], shift: [f64; 2]) -> Self {
        let k_dot_d: f64 = (0..self.dim).map(|j| self.k[j] * shift[j]).sum();
        let mut out = *self;
        out.amplitude *= Complex64::from_polar(1.0, phase + k_dot_d);
        for j in 0..self.dim {
            out.k[j] += linear[j];
            out.c[j] -= shift[j];
        }
        out
    }

    /// Pointwise value. `r[..dim]` is read.
    pub fn eval(&self, r: &[f64]) -> Complex64 {
        let mut phase = 0.0;
        let mut decay = 0.0;
        for (j, &rj) in r.iter().enumerate().take(self.dim) {
            phase += self.k[j] * rj;
            let u = (rj - self.c[j]) / self.w[j];
            decay += 0.5 * u * u;
        }
        self.amplitude * Complex64::from_polar((-decay).exp(), phase)
    }

    /// L² norm, |A|² Π_j w_j √π under the square root.
    pub fn norm(&self) -> f64 {
        let volume: f64 = self.w[..self.dim].iter().map(|w| w * SQRT_PI).product();
        self.amplitude.norm() * volume.sqrt()
    }

    pub fn norm_squared(&self) -> f64 {
        let volume: f64 = self.w[..self.dim].iter().map(|w| w * SQRT_PI).product();
        self.amplitude.norm_sqr() * volume
    }
}

/// ⟨f, h⟩ = ∫ conj(f) h, conjugate-linear in the first slot. The integrand
/// factorises per axis into shifted Gaussians, giving the closed form
///
/// ```text
/// ⟨f,h⟩ = conj(A_f) A_h Π_j sqrt(π/(a+b)) e^{−ab Δc²/(a+b)} e^{i Δk μ − Δk²/(4(a+b))}
/// ```
///
/// with a = 1/(2 w_f²), b = 1/(2 w_h²), Δk = k_h − k_f, Δc = c_f − c_h and
/// μ = (a c_f + b c_h)/(a + b) per axis.
pub fn inner_product(f: &GaussianPacket, h: &GaussianPacket) -> Result<Complex64> {
    if f.dim != h.dim {
        return Err(Error::DimensionMismatch { expected: f.dim, got: h.dim });
    }
    let mut value = f.amplitude.conj() * h.amplitude;
    for j in 0..f.dim {
        let a = 1.0 / (2.0 * f.w[j] * f.w[j]);
        let b = 1.0 / (2.0 * h.w[j] * h.w[j]);
        let dk = h.k[j] - f.k[j];
        let dc = f.c[j] - h.c[j];
        let mu = (a * f.c[j] + b * h.c[j]) / (a + b);
        let magnitude = (std::f64::consts::PI / (a + b)).sqrt()
            * (-a * b * dc * dc / (a + b) - dk * dk / (4.0 * (a + b))).exp();
        value *= Complex64::from_polar(magnitude, dk * mu);
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn eval_at_centre_and_one_width_out() {
        let f = GaussianPacket::new_1d(Complex64::new(2.0, 0.0), 0.0, 0.0, 1.0).unwrap();
        assert_eq!(f.eval(&[0.0]), Complex64::new(2.0, 0.0));
        // r = sqrt(2): decay exp(−(√2)²/2) = e^{−1}
        let v = f.eval(&[std::f64::consts::SQRT_2]);
        assert_relative_eq!(v.re, 2.0 * (-1.0f64).exp(), max_relative = 1e-15);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn norm_closed_form() {
        let f = GaussianPacket::new_2d(Complex64::new(0.0, 3.0), [1.0, -2.0], [0.5, 0.25], [2.0, 0.5]).unwrap();
        assert_relative_eq!(f.norm_squared(), 9.0 * (2.0 * SQRT_PI) * (0.5 * SQRT_PI), max_relative = 1e-15);
    }

    #[test]
    fn inner_product_diagonal_matches_norm() {
        let f = GaussianPacket::new_2d(Complex64::new(1.5, -0.5), [0.3, 0.7], [-1.0, 2.0], [1.0, 3.0]).unwrap();
        let ip = inner_product(&f, &f).unwrap();
        assert_relative_eq!(ip.re, f.norm_squared(), max_relative = 1e-14);
        assert!(ip.im.abs() < 1e-14 * ip.re);
    }

    #[test]
    fn inner_product_is_conjugate_symmetric() {
        let f = GaussianPacket::new_1d(Complex64::new(1.0, 0.8), 0.4, -0.2, 1.3).unwrap();
        let h = GaussianPacket::new_1d(Complex64::new(-0.3, 0.5), -1.1, 0.9, 0.7).unwrap();
        let fh = inner_product(&f, &h).unwrap();
        let hf = inner_product(&h, &f).unwrap();
        assert_relative_eq!(fh.re, hf.re, max_relative = 1e-14);
        assert_relative_eq!(fh.im, -hf.im, max_relative = 1e-14);
    }

    #[test]
    fn separated_packets_decouple_exponentially() {
        let w = 0.8;
        let f = GaussianPacket::new_1d(Complex64::new(1.0, 0.0), 0.0, 0.0, w).unwrap();
        let h = GaussianPacket::new_1d(Complex64::new(1.0, 0.0), 0.0, 20.0 * w, w).unwrap();
        let ip = inner_product(&f, &h).unwrap();
        // equal widths: suppression e^{−Δc²/(4w²)} = e^{−100}
        let expected = w * SQRT_PI * (-100.0f64).exp();
        assert_relative_eq!(ip.re, expected, max_relative = 1e-12);
        assert!(ip.norm() < 1e-10 * f.norm() * h.norm());
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let f = GaussianPacket::standard(1).unwrap();
        let h = GaussianPacket::standard(2).unwrap();
        assert!(matches!(inner_product(&f, &h), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn construction_guards() {
        assert!(GaussianPacket::new_1d(Complex64::new(1.0, 0.0), 0.0, 0.0, 0.0).is_err());
        assert!(GaussianPacket::new_1d(Complex64::new(1.0, 0.0), 0.0, 0.0, -1.0).is_err());
        assert!(GaussianPacket::new(3, Complex64::new(1.0, 0.0), [0.0; 2], [0.0; 2], [1.0; 2]).is_err());
    }

    #[test]
    fn json_round_trip_is_exact() {
        let f = GaussianPacket::new_2d(Complex64::new(0.25, -1.5), [0.1, 0.2], [-0.3, 0.4], [1.5, 2.5]).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert!(text.contains("\"dim\":2"));
        let back: GaussianPacket = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"dim":2,"amplitude":[1.0,0.0],"k":[0.0],"c":[0.0,0.0],"w":[1.0,1.0]}"#;
        assert!(serde_json::from_str::<GaussianPacket>(bad).is_err());
    }
}
