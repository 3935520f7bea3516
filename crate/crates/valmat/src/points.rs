//! `label=value` point syntax. Omitted labels are 0.

use valmat_core::{GroundSet, Point, Rational, RationalPoint};

fn pairs<'a>(ground: &GroundSet, text: &'a str) -> Result<Vec<(usize, &'a str)>, String> {
    let mut seen = vec![false; ground.len()];
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (label, value) = item
            .split_once('=')
            .ok_or_else(|| format!("`{item}` is not of the form label=value"))?;
        let label = label.trim();
        let pos = ground.position(label).ok().ok_or_else(|| format!("unknown element `{label}`"))?;
        if std::mem::replace(&mut seen[pos], true) {
            return Err(format!("element `{label}` given twice"));
        }
        out.push((pos, value.trim()));
    }
    Ok(out)
}

pub fn parse_point(ground: &GroundSet, text: &str) -> Result<Point, String> {
    let mut coords = vec![0i64; ground.len()];
    for (pos, value) in pairs(ground, text)? {
        coords[pos] = value.parse().map_err(|_| format!("`{value}` is not an integer"))?;
    }
    Ok(Point::new(coords))
}

/// Accepts integers and fractions `p/q`.
pub fn parse_rational_point(ground: &GroundSet, text: &str) -> Result<RationalPoint, String> {
    let mut coords = vec![Rational::from_integer(0); ground.len()];
    for (pos, value) in pairs(ground, text)? {
        coords[pos] = parse_rational(value)?;
    }
    Ok(RationalPoint::new(coords))
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    let bad = || format!("`{text}` is not a rational number");
    match text.split_once('/') {
        None => text.parse().map(Rational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(format!("`{text}` has a zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// A comma-separated list of labels.
pub fn parse_set(ground: &GroundSet, text: &str) -> Result<valmat_core::ElementSet, String> {
    let mut set = valmat_core::ElementSet::EMPTY;
    for label in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let pos = ground.position(label).ok().ok_or_else(|| format!("unknown element `{label}`"))?;
        set = set.with(pos);
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sparse_points() {
        let g = GroundSet::numbered(3).unwrap();
        assert_eq!(parse_point(&g, "e1=1, e3=-2").unwrap(), Point::new(vec![1, 0, -2]));
        assert_eq!(parse_point(&g, "").unwrap(), Point::zeros(3));
        assert!(parse_point(&g, "e1=1,e1=2").is_err());
        assert!(parse_point(&g, "e4=1").is_err());
        assert!(parse_point(&g, "e1").is_err());
        assert!(parse_point(&g, "e1=1/2").is_err());
        let r = parse_rational_point(&g, "e1=1/2,e2=-3/4,e3=2").unwrap();
        assert_eq!(r.get(0), Rational::new(1, 2));
        assert_eq!(r.get(1), Rational::new(-3, 4));
        assert_eq!(r.get(2), Rational::from_integer(2));
        assert!(parse_rational_point(&g, "e1=1/0").is_err());
    }
}
