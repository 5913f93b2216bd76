//! Reference coefficients of the half-offset construction, as expressions in `t`.

/// `(name, exponent of x, expression)` for the coefficients of `Q`.
pub const Q_COEFFS: [(&str, usize, &str); 4] = [
    ("Q.x6.coeff", 6, "1"),
    ("Q.x4.coeff", 4, "(-48*t^4-840*t^2-707)/16"),
    (
        "Q.x2.coeff",
        2,
        "(768*t^8+8960*t^6-9184*t^4-322000*t^2+51331)/256",
    ),
    (
        "Q.x0.coeff",
        0,
        "(-4096*t^12+71680*t^10-1994496*t^8-50973440*t^6-251212528*t^4-260162280*t^2-50625)/4096",
    ),
];

/// `(name, exponent of x, expression)` for the coefficients of `R`.
pub const R_COEFFS: [(&str, usize, &str); 3] = [
    (
        "R.x4.coeff",
        4,
        "9*t^2*(5376*t^10+779520*t^8+11657184*t^6+57509200*t^4+95561365*t^2+36613360)/64",
    ),
    (
        "R.x2.coeff",
        2,
        "-9*t^2*(86016*t^14+6113280*t^12+71158528*t^10+145053440*t^8-1767894864*t^6-8757574840*t^4-7679989163*t^2+1441328880)/512",
    ),
    (
        "R.x0.coeff",
        0,
        "9*t^2*(336*t^6+11320*t^4+54229*t^2+56560)*(4096*t^12-71680*t^10+1220352*t^8+24892160*t^6+126268912*t^4+129848040*t^2+50625)/16384",
    ),
];

/// `α(t)` of `T² = S(S² + αS + β)`.
pub const ALPHA: &str = "9/256*t^2*(86016*t^14+6113280*t^12+71158528*t^10+145053440*t^8-1767894864*t^6-8757574840*t^4-7679989163*t^2+1441328880)";

/// `β(t)` of `T² = S(S² + αS + β)`.
pub const BETA: &str = "-243*t^4/1024*(4*t^2+17)*(4*t^2+33)*(4*t^2+97)*(28*t^2+151)*(4*t^3-48*t^2+t-68)*(4*t^3-24*t^2+9*t-26)*(4*t^3+24*t^2+9*t+26)*(4*t^3+48*t^2+t+68)*(20*t^3-24*t^2+125*t-10)*(20*t^3+24*t^2+125*t+10)";
