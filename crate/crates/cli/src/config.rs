//! Flat key = value configuration, loaded from the file named by the
//! `BESSEL_REPS_CONFIG` environment variable. Command-line flags override
//! config values, which override the built-in defaults.

use bessel_reps::QuadSpec;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct FileConfig {
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
    pub max_depth: Option<u32>,
    pub tol_mult: Option<f64>,
    pub abs_floor: Option<f64>,
}

pub const CONFIG_ENV: &str = "BESSEL_REPS_CONFIG";

/// Parses `key = value` lines; `#` starts a comment, blank lines ignored.
/// Unknown keys are rejected so typos do not silently change tolerances.
pub fn parse(text: &str) -> Result<FileConfig, String> {
    let mut cfg = FileConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("config line {}: expected key = value", lineno + 1));
        };
        let key = key.trim();
        let value = value.trim();
        fn parsed<T: std::str::FromStr>(key: &str, value: &str, lineno: usize) -> Result<T, String>
        where
            T::Err: std::fmt::Display,
        {
            value
                .parse()
                .map_err(|e| format!("config line {}: bad value for {key}: {e}", lineno + 1))
        }
        match key {
            "rel_tol" => cfg.rel_tol = Some(parsed(key, value, lineno)?),
            "abs_tol" => cfg.abs_tol = Some(parsed(key, value, lineno)?),
            "max_depth" => cfg.max_depth = Some(parsed(key, value, lineno)?),
            "tol_mult" => cfg.tol_mult = Some(parsed(key, value, lineno)?),
            "abs_floor" => cfg.abs_floor = Some(parsed(key, value, lineno)?),
            _ => return Err(format!("config line {}: unknown key {key}", lineno + 1)),
        }
    }
    Ok(cfg)
}

pub fn load_from_env() -> Result<FileConfig, String> {
    match std::env::var(CONFIG_ENV) {
        Ok(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read config {path}: {e}"))?;
            parse(&text)
        }
        Err(_) => Ok(FileConfig::default()),
    }
}

/// Resolved QuadSpec after layering defaults, config, and flags.
pub fn resolve_spec(
    cfg: &FileConfig,
    rel_tol: Option<f64>,
    abs_tol: Option<f64>,
    max_depth: Option<u32>,
) -> QuadSpec {
    let mut spec = QuadSpec::default();
    if let Some(v) = cfg.rel_tol {
        spec.rel_tol = v;
    }
    if let Some(v) = cfg.abs_tol {
        spec.abs_tol = v;
    }
    if let Some(v) = cfg.max_depth {
        spec.max_depth = v;
    }
    if let Some(v) = rel_tol {
        spec.rel_tol = v;
    }
    if let Some(v) = abs_tol {
        spec.abs_tol = v;
    }
    if let Some(v) = max_depth {
        spec.max_depth = v;
    }
    spec
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let cfg = parse("rel_tol = 1e-8\n# comment\nabs_tol=1e-10\nmax_depth = 20\n").unwrap();
        assert_eq!(cfg.rel_tol, Some(1e-8));
        assert_eq!(cfg.abs_tol, Some(1e-10));
        assert_eq!(cfg.max_depth, Some(20));
        assert_eq!(cfg.tol_mult, None);
    }

    #[test]
    fn rejects_unknown_keys_and_garbage() {
        assert!(parse("rel_tolerance = 1e-8").is_err());
        assert!(parse("rel_tol").is_err());
        assert!(parse("rel_tol = fast").is_err());
    }

    #[test]
    fn flags_override_config() {
        let cfg = parse("rel_tol = 1e-6\nmax_depth = 9").unwrap();
        let spec = resolve_spec(&cfg, Some(1e-12), None, None);
        assert_eq!(spec.rel_tol, 1e-12);
        assert_eq!(spec.max_depth, 9);
        assert_eq!(spec.abs_tol, QuadSpec::default().abs_tol);
    }
}
