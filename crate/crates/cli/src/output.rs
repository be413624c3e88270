use hhbounds_core::Rule;

/// 17 significant digits, positional for moderate magnitudes.
pub fn sig17(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        format!("{:.*}", (16 - exp) as usize, v)
    } else {
        format!("{v:.16e}")
    }
}

pub fn corollary_claim(rule: Rule) -> &'static str {
    match rule {
        Rule::Midpoint => "cor1",
        Rule::Trapezoid => "cor2",
        Rule::Simpson => "cor3",
    }
}

pub fn m_form_claim(rule: Rule) -> &'static str {
    match rule {
        Rule::Midpoint => "cor4",
        Rule::Trapezoid => "cor5",
        Rule::Simpson => "cor8",
    }
}
