//! Reference values for the fixed six-term construction, as expressions in `t`.

const DEN: &str = "(8*t^7+4*t^6+8*t^5+4*t^4+2*t^3+t^2+2*t+1)";

/// Coefficients of `g² = λ₁d² + λ₂e² + λ₃f²`.
pub fn lambda() -> [(&'static str, String); 3] {
    [
        (
            "lambda1",
            format!("3*(8*t^8-20*t^7+36*t^6-24*t^5+2*t^4+15*t^3+9*t^2-16*t-10)/(t*{DEN})"),
        ),
        (
            "lambda2",
            format!("-3*(4*t^3-18*t^2+28*t-15)*(2*t^4-2*t^3+7*t^2-2*t+5)/{DEN}"),
        ),
        (
            "lambda3",
            format!("(4*t^3-18*t^2+28*t-15)*(2*t^5-8*t^4+15*t^3-15*t^2+8*t-2)/(t*{DEN})"),
        ),
    ]
}

/// `ρ` with `q = ρw`.
pub const RHO: &str = "8*(20*t^6-54*t^5+130*t^4-219*t^3+257*t^2-132*t-2)/(3*(48*t^6-96*t^5+420*t^4-496*t^3+756*t^2-312*t+5))";

/// `h = prefactor · (h_pp p² + h_pw pw + h_ww w²)`.
pub const H_PREFACTOR: &str =
    "(t-1)*(2*t+1)*(t^2-2*t+2)*(2*t^2+2*t+1)/(3*(2*t-1)^2*(2*t^2-2*t+5)*(12*t^3-6*t^2+60*t-1)^2)";
pub const H_PP: &str = "9*(2*t-1)^2*(2*t^2-2*t+5)^2*(12*t^3-6*t^2+60*t-1)^2";
pub const H_PW: &str =
    "-96*t*(2*t-1)*(t^2+4)*(2*t^2-2*t+5)*(4*t^3-42*t^2+4*t-31)*(12*t^3-6*t^2+60*t-1)";
pub const H_WW: &str = "-(2*t-3)*(2*t^2-6*t+5)*(1088*t^9+22944*t^8+13680*t^7+179048*t^6+67104*t^5+400204*t^4+110908*t^3+211754*t^2-2140*t-15)";

/// The specialization `t = 3` of the Jacobian and its point.
pub const T3_A4: &str = "-156217789162987774532352000000000000/40642963201";
pub const T3_A6: &str = "22789637573454810302335707893243904000000000000000000/8193662024284801";
pub const T3_X: &str = "19558022787408000000/201601";
pub const T3_Y: &str = "86476754780118743040000000000/90518849";
