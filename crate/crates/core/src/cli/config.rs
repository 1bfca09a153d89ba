use std::ffi::OsString;
use std::path::Path;

use clap::{parser::ValueSource, ArgMatches, Command};

use crate::error::{Error, Result};

/// `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("config line {}: expected key=value", i + 1)))?;
        out.push((k.trim().replace('_', "-"), v.trim().to_string()));
    }
    Ok(out)
}

pub fn read_config(path: &Path) -> Result<Vec<(String, String)>> {
    parse_config(&std::fs::read_to_string(path)?)
}

/// Append `--key value` for each config entry the subcommand accepts and the
/// command line left unset. Keys belonging only to other subcommands are skipped.
pub fn merge(
    cmd: &Command,
    matches: &ArgMatches,
    mut argv: Vec<OsString>,
    entries: &[(String, String)],
) -> Result<Vec<OsString>> {
    let Some((name, sub_matches)) = matches.subcommand() else {
        return Ok(argv);
    };
    let sub = cmd.find_subcommand(name).expect("parsed subcommand exists");
    for (key, value) in entries {
        if key == "config" {
            continue;
        }
        let Some(arg) = sub
            .get_arguments()
            .chain(cmd.get_arguments())
            .find(|a| a.get_long() == Some(key.as_str()))
        else {
            let known = cmd
                .get_subcommands()
                .flat_map(|s| s.get_arguments())
                .any(|a| a.get_long() == Some(key.as_str()));
            if known {
                continue;
            }
            return Err(Error::Parse(format!("unknown config key {key:?}")));
        };
        let id = arg.get_id().as_str();
        let set_by =
            |m: &ArgMatches| m.ids().any(|i| i.as_str() == id) && m.value_source(id) == Some(ValueSource::CommandLine);
        if set_by(sub_matches) || set_by(matches) {
            continue;
        }
        if arg.get_action().takes_values() {
            argv.push(format!("--{key}").into());
            argv.push(value.into());
        } else if matches!(value.as_str(), "true" | "1" | "yes") {
            argv.push(format!("--{key}").into());
        }
    }
    Ok(argv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lines() {
        let v = parse_config("# defaults\ndepth = 30\nseed=7 # inline\n\n").unwrap();
        assert_eq!(v, vec![("depth".into(), "30".into()), ("seed".into(), "7".into())]);
        assert!(parse_config("oops").is_err());
    }
}
