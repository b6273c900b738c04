//! Partitions in the compact label notation: one digit per part, `d^k` for
//! `k` equal parts, and `{n}` for a part or exponent above 9.

/// Parses a part list such as `31`, `2^21` or `1^4`. Parts must be weakly
/// decreasing and positive; the empty string is the empty partition.
pub fn parse_parts(text: &str) -> Result<Vec<u32>, String> {
    let bytes = text.as_bytes();
    let mut parts: Vec<u32> = Vec::new();
    let mut i = 0;
    let number = |i: &mut usize| -> Result<u32, String> {
        match bytes.get(*i) {
            Some(b'{') => {
                let close = text[*i..].find('}').ok_or_else(|| format!("unclosed `{{` at byte {i}"))? + *i;
                let v = text[*i + 1..close].parse::<u32>().map_err(|_| format!("bad number at byte {i}"))?;
                *i = close + 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                *i += 1;
                Ok(u32::from(c - b'0'))
            }
            _ => Err(format!("expected a digit at byte {i}")),
        }
    };
    while i < bytes.len() {
        let part = number(&mut i)?;
        if part == 0 {
            return Err("parts must be positive".into());
        }
        let mut count = 1;
        if bytes.get(i) == Some(&b'^') {
            i += 1;
            count = number(&mut i)?;
            if count == 0 {
                return Err("exponent must be positive".into());
            }
        }
        if parts.last().is_some_and(|&last| last < part) {
            return Err("parts must be weakly decreasing".into());
        }
        parts.extend(std::iter::repeat(part).take(count as usize));
    }
    Ok(parts)
}

/// Prints a weakly decreasing part list in compact notation.
pub fn format_parts(parts: &[u32]) -> String {
    fn num(v: u32) -> String {
        if v < 10 {
            v.to_string()
        } else {
            format!("{{{v}}}")
        }
    }
    let mut out = String::new();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        out.push_str(&num(parts[i]));
        if j - i > 1 {
            out.push('^');
            out.push_str(&num((j - i) as u32));
        }
        i = j;
    }
    out
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
