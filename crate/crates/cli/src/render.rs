use qec_entropy::channel::ChannelReport;
use qec_entropy::entropy::EntropyDiagram;
use qec_entropy::verify::Verdict;

/// Fixed-precision number with negative zero folded to zero.
pub fn num(x: f64) -> String {
    let s = format!("{x:.9}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_owned()
    } else {
        s
    }
}

pub fn pass_word(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn table(rows: &[(String, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("  {k:<width$}  {v}\n")).collect()
}

pub fn verdict(title: &str, v: &Verdict) -> String {
    let mut out = format!("{title}: {} (tolerance {:e}, {} witnesses)\n", pass_word(v.pass), v.tolerance, v.witnesses.len());
    for w in &v.witnesses {
        let op = w.operator.as_ref().map(|p| format!(" operator {p}")).unwrap_or_default();
        out.push_str(&format!("  pattern {:?}{op}: {}\n", w.pattern, num(w.magnitude)));
    }
    out
}

pub fn diagram(d: &EntropyDiagram) -> String {
    let group = |g: &str| if g.contains(',') { format!("{{{g}}}") } else { g.to_owned() };
    let (x, y, z) = (group(&d.x), group(&d.y), group(&d.z));
    let rows = [
        (format!("S({x})"), d.s_x),
        (format!("S({y})"), d.s_y),
        (format!("S({z})"), d.s_z),
        (format!("S({x}|{y},{z})"), d.c_x),
        (format!("S({y}|{x},{z})"), d.c_y),
        (format!("S({z}|{x},{y})"), d.c_z),
        (format!("S({x}:{y}|{z})"), d.m_xy),
        (format!("S({x}:{z}|{y})"), d.m_xz),
        (format!("S({y}:{z}|{x})"), d.m_yz),
        (format!("S({x}:{y}:{z})"), d.t),
        (format!("S({x}:{y})"), d.mutual_xy()),
        (format!("S({x}:{z})"), d.mutual_xz()),
        (format!("S({y}:{z})"), d.mutual_yz()),
        (format!("S({x},{y},{z})"), d.s_xyz),
    ];
    let rows: Vec<(String, String)> = rows.into_iter().map(|(k, v)| (k, format!("{} {}", num(v), d.unit))).collect();
    format!("groups: {} | {} | {}\n{}", d.x, d.y, d.z, table(&rows))
}

pub fn channel(r: &ChannelReport) -> String {
    let flag = if r.borderline { " (borderline)" } else { "" };
    format!(
        "pattern {}  M = {}  L = {}  {}{flag}\n",
        r.pattern,
        num(r.m),
        num(r.l),
        match r.verdict {
            qec_entropy::channel::ChannelVerdict::Perfect => "perfect",
            qec_entropy::channel::ChannelVerdict::Lossy => "lossy",
        }
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_fold_negative_zero() {
        assert_eq!(num(-1e-15), "0.000000000");
        assert_eq!(num(-1.0), "-1.000000000");
        assert_eq!(num(2.0), "2.000000000");
    }

    #[test]
    fn tables_align() {
        let t = table(&[("a".into(), "1".into()), ("long".into(), "2".into())]);
        assert_eq!(t, "  a     1\n  long  2\n");
    }
}
