//! Fixed-precision decimal formatting shared by the CSV and dump formats.

/// 12 significant digits, used by the CSV outputs.
pub fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// 17 significant digits; enough for `f64` values to round-trip exactly.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig17_round_trips() {
        for &x in &[0.0, 1.0, -2.0 / 3.0, 1e-17, 6.02214076e23, f64::MIN_POSITIVE] {
            let back: f64 = sig17(x).parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits());
        }
    }

    #[test]
    fn sig12_has_twelve_digits() {
        assert_eq!(sig12(2.0 / 3.0), "6.66666666667e-1");
        assert_eq!(sig12(0.0), "0.00000000000e0");
    }
}
