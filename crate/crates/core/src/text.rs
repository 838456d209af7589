use crate::error::{Error, Result};

/// Parses a comma-separated list of positive integers with no whitespace.
pub(crate) fn parse_letters(kind: &'static str, input: &str, part: &str) -> Result<Vec<usize>> {
    let err = |reason: String| Error::Parse {
        kind,
        input: input.to_owned(),
        reason,
    };
    if part.is_empty() {
        return Err(err("empty list".into()));
    }
    part.split(',')
        .map(|tok| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(format!("{tok:?} is not a positive integer")));
            }
            tok.parse::<usize>().map_err(|e| err(format!("{tok:?}: {e}")))
        })
        .collect()
}

pub(crate) fn join(letters: &[usize], f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
    for (i, x) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}
