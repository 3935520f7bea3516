//! `VALMAT_CAPS=key=value,...` overrides for enumeration caps.

use valmat_core::Caps;

pub const ENV_VAR: &str = "VALMAT_CAPS";

pub fn parse_caps(text: &str) -> Result<Caps, String> {
    let mut caps = Caps::default();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| format!("`{item}` is not key=value"))?;
        let value: usize = value.trim().parse().map_err(|_| format!("`{value}` is not a non-negative integer"))?;
        let slot = match key.trim() {
            "flats_elements" => &mut caps.flats_elements,
            "exhaustive_elements" => &mut caps.exhaustive_elements,
            "tw_elements" => &mut caps.tw_elements,
            "tw_rank" => &mut caps.tw_rank,
            "interval_points" => &mut caps.interval_points,
            "oracle_box" => &mut caps.oracle_box,
            other => return Err(format!("unknown cap `{other}`")),
        };
        *slot = value;
    }
    Ok(caps)
}

pub fn caps_from_env() -> Result<Caps, String> {
    match std::env::var(ENV_VAR) {
        Ok(text) => parse_caps(&text).map_err(|e| format!("{ENV_VAR}: {e}")),
        Err(_) => Ok(Caps::default()),
    }
}
