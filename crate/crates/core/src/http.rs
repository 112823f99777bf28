//! Strict HTTP/1.1 subset framing.
//!
//! The interposer refuses to forward anything it cannot fully account for,
//! so the parser accepts a deliberately narrow profile: CRLF line endings,
//! `GET`/`POST` only, `Content-Length` bodies only (no chunked encoding),
//! ASCII header bytes, and hard caps on line length, header count, and
//! body size. Everything outside that profile is an error, never a guess.
//!
//! The parser is incremental: feed it bytes as they arrive and it answers
//! "complete message", "need more", or "malformed". Bytes following a
//! complete message are retained for the next message on the connection.

use std::fmt;

use thiserror::Error;

/// Hard cap on the request/status line, excluding the CRLF.
pub const MAX_START_LINE_BYTES: usize = 8 * 1024;
/// Hard cap on a single header line, excluding the CRLF.
pub const MAX_HEADER_LINE_BYTES: usize = 8 * 1024;
/// Hard cap on the number of headers per message.
pub const MAX_HEADERS: usize = 64;
/// Hard cap on a declared body. Policy-level size fuses are expected to be
/// far tighter; this bound only protects the buffering proxy itself.
pub const MAX_BODY_BYTES: usize = 16 * 1024 * 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Get,
    Post,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Get => "GET",
            Method::Post => "POST",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First line of a message: request line or status line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StartLine {
    Request { method: Method, target: String },
    Response { status: u16, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Header {
    pub name: String,
    pub value: String,
}

/// A fully buffered message. Invariant: if `body` is non-empty, a single
/// `Content-Length` header exists and matches `body.len()` exactly; the
/// parser enforces this on input and [`HttpMessage::to_bytes`] on output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HttpMessage {
    pub start: StartLine,
    pub headers: Vec<Header>,
    pub body: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed start line")]
    MalformedStartLine,
    #[error("unsupported method (only GET and POST are accepted)")]
    UnsupportedMethod,
    #[error("unsupported protocol version (only HTTP/1.1 is accepted)")]
    UnsupportedVersion,
    #[error("line exceeds the {0}-byte cap")]
    OversizeLine(usize),
    #[error("more than {MAX_HEADERS} headers")]
    TooManyHeaders,
    #[error("malformed header line")]
    MalformedHeader,
    #[error("non-ASCII byte in header")]
    NonAsciiHeader,
    #[error("duplicate Content-Length header")]
    DuplicateContentLength,
    #[error("malformed Content-Length value")]
    MalformedContentLength,
    #[error("declared body exceeds the {MAX_BODY_BYTES}-byte cap")]
    OversizeBody,
    #[error("transfer codings are not supported")]
    UnsupportedTransferEncoding,
}

/// Outcome of a single parse attempt over a byte string.
#[derive(Debug, Clone, PartialEq)]
pub enum ParseOutcome {
    Message(HttpMessage),
    NeedMore,
    Error(ParseError),
}

/// Which side of the exchange the parser is framing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Request,
    Response,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Start,
    Headers,
    Body,
}

/// Incremental push parser for one direction of a connection.
///
/// A parse error is sticky: the stream is unsynchronized and the
/// connection should be torn down.
#[derive(Debug)]
pub struct MessageParser {
    role: Role,
    buf: Vec<u8>,
    pos: usize,
    state: State,
    start: Option<StartLine>,
    headers: Vec<Header>,
    content_length: Option<usize>,
    failed: Option<ParseError>,
}

impl MessageParser {
    pub fn new(role: Role) -> Self {
        MessageParser {
            role,
            buf: Vec::new(),
            pos: 0,
            state: State::Start,
            start: None,
            headers: Vec::new(),
            content_length: None,
            failed: None,
        }
    }

    /// Append bytes and attempt to complete a message.
    ///
    /// `Ok(Some(_))` yields one message; call [`MessageParser::poll`] again
    /// to drain pipelined messages already buffered. `Ok(None)` means more
    /// bytes are needed.
    pub fn feed(&mut self, bytes: &[u8]) -> Result<Option<HttpMessage>, ParseError> {
        self.buf.extend_from_slice(bytes);
        self.poll()
    }

    /// Attempt to complete a message from already buffered bytes.
    pub fn poll(&mut self) -> Result<Option<HttpMessage>, ParseError> {
        if let Some(e) = &self.failed {
            return Err(e.clone());
        }
        match self.drive() {
            Ok(msg) => Ok(msg),
            Err(e) => {
                self.failed = Some(e.clone());
                Err(e)
            }
        }
    }

    /// Bytes buffered beyond the last completed message.
    pub fn buffered(&self) -> usize {
        self.buf.len() - self.pos
    }

    fn drive(&mut self) -> Result<Option<HttpMessage>, ParseError> {
        loop {
            match self.state {
                State::Start => {
                    let line = match self.take_line(MAX_START_LINE_BYTES)? {
                        Some(l) => l,
                        None => return Ok(None),
                    };
                    self.start = Some(parse_start_line(&line, self.role)?);
                    self.state = State::Headers;
                }
                State::Headers => {
                    let line = match self.take_line(MAX_HEADER_LINE_BYTES)? {
                        Some(l) => l,
                        None => return Ok(None),
                    };
                    if line.is_empty() {
                        let declared = self.content_length.unwrap_or(0);
                        if declared > MAX_BODY_BYTES {
                            return Err(ParseError::OversizeBody);
                        }
                        self.state = State::Body;
                        continue;
                    }
                    if self.headers.len() >= MAX_HEADERS {
                        return Err(ParseError::TooManyHeaders);
                    }
                    let header = parse_header_line(&line)?;
                    if header.name.eq_ignore_ascii_case("content-length") {
                        if self.content_length.is_some() {
                            return Err(ParseError::DuplicateContentLength);
                        }
                        self.content_length = Some(parse_content_length(&header.value)?);
                    }
                    if header.name.eq_ignore_ascii_case("transfer-encoding") {
                        return Err(ParseError::UnsupportedTransferEncoding);
                    }
                    self.headers.push(header);
                }
                State::Body => {
                    let want = self.content_length.unwrap_or(0);
                    if self.buffered() < want {
                        return Ok(None);
                    }
                    let body = self.buf[self.pos..self.pos + want].to_vec();
                    self.pos += want;
                    let msg = HttpMessage {
                        start: self.start.take().expect("start line set before body"),
                        headers: std::mem::take(&mut self.headers),
                        body,
                    };
                    self.reset_for_next();
                    return Ok(Some(msg));
                }
            }
        }
    }

    /// Extract one CRLF-terminated line (without the CRLF), enforcing the
    /// length cap even before the terminator arrives.
    fn take_line(&mut self, cap: usize) -> Result<Option<Vec<u8>>, ParseError> {
        let avail = &self.buf[self.pos..];
        match avail.iter().position(|&b| b == b'\n') {
            Some(nl) => {
                // Incremental feeding trips the cap before a late
                // terminator arrives; mirror that ordering here.
                if nl > cap + 1 {
                    return Err(ParseError::OversizeLine(cap));
                }
                if nl == 0 || avail[nl - 1] != b'\r' {
                    // Bare LF: reject rather than guess at intent.
                    return Err(ParseError::MalformedHeader);
                }
                let line = avail[..nl - 1].to_vec();
                if line.contains(&b'\r') {
                    return Err(ParseError::MalformedHeader);
                }
                self.pos += nl + 1;
                Ok(Some(line))
            }
            None => {
                if avail.len() > cap + 1 {
                    return Err(ParseError::OversizeLine(cap));
                }
                Ok(None)
            }
        }
    }

    fn reset_for_next(&mut self) {
        self.buf.drain(..self.pos);
        self.pos = 0;
        self.state = State::Start;
        self.content_length = None;
    }
}

/// One-shot parse over a complete byte string.
///
/// Trailing bytes after a complete message are ignored here; connection
/// handling uses [`MessageParser`] directly and keeps them.
pub fn parse_message(bytes: &[u8], role: Role) -> ParseOutcome {
    let mut parser = MessageParser::new(role);
    match parser.feed(bytes) {
        Ok(Some(msg)) => ParseOutcome::Message(msg),
        Ok(None) => ParseOutcome::NeedMore,
        Err(e) => ParseOutcome::Error(e),
    }
}

fn parse_start_line(line: &[u8], role: Role) -> Result<StartLine, ParseError> {
    if line.is_empty() || !line.iter().all(|&b| (0x20..=0x7E).contains(&b)) {
        return Err(ParseError::MalformedStartLine);
    }
    let text = std::str::from_utf8(line).map_err(|_| ParseError::MalformedStartLine)?;
    match role {
        Role::Request => {
            let mut parts = text.split(' ');
            let (method, target, version) = match (parts.next(), parts.next(), parts.next()) {
                (Some(m), Some(t), Some(v)) if parts.next().is_none() => (m, t, v),
                _ => return Err(ParseError::MalformedStartLine),
            };
            let method = match method {
                "GET" => Method::Get,
                "POST" => Method::Post,
                _ => return Err(ParseError::UnsupportedMethod),
            };
            if target.is_empty() || target.bytes().any(|b| !(0x21..=0x7E).contains(&b)) {
                return Err(ParseError::MalformedStartLine);
            }
            if version != "HTTP/1.1" {
                return Err(ParseError::UnsupportedVersion);
            }
            Ok(StartLine::Request {
                method,
                target: target.to_string(),
            })
        }
        Role::Response => {
            let rest = text
                .strip_prefix("HTTP/1.1 ")
                .ok_or(ParseError::UnsupportedVersion)?;
            let (code, reason) = match rest.split_once(' ') {
                Some((c, r)) => (c, r),
                None => (rest, ""),
            };
            if code.len() != 3 || !code.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseError::MalformedStartLine);
            }
            let status: u16 = code.parse().map_err(|_| ParseError::MalformedStartLine)?;
            if !(100..=599).contains(&status) {
                return Err(ParseError::MalformedStartLine);
            }
            Ok(StartLine::Response {
                status,
                reason: reason.to_string(),
            })
        }
    }
}

fn parse_header_line(line: &[u8]) -> Result<Header, ParseError> {
    if line.iter().any(|&b| b >= 0x80) {
        return Err(ParseError::NonAsciiHeader);
    }
    if line[0] == b' ' || line[0] == b'\t' {
        // Obsolete line folding.
        return Err(ParseError::MalformedHeader);
    }
    let colon = line
        .iter()
        .position(|&b| b == b':')
        .ok_or(ParseError::MalformedHeader)?;
    let name = &line[..colon];
    if name.is_empty() || !name.iter().all(|&b| is_token_byte(b)) {
        return Err(ParseError::MalformedHeader);
    }
    let raw_value = &line[colon + 1..];
    if !raw_value
        .iter()
        .all(|&b| b == b'\t' || (0x20..=0x7E).contains(&b))
    {
        return Err(ParseError::MalformedHeader);
    }
    let value = std::str::from_utf8(raw_value)
        .map_err(|_| ParseError::NonAsciiHeader)?
        .trim_matches([' ', '\t'])
        .to_string();
    let name = std::str::from_utf8(name)
        .map_err(|_| ParseError::NonAsciiHeader)?
        .to_string();
    Ok(Header { name, value })
}

fn parse_content_length(value: &str) -> Result<usize, ParseError> {
    if value.is_empty() || !value.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::MalformedContentLength);
    }
    value
        .parse::<usize>()
        .map_err(|_| ParseError::MalformedContentLength)
}

fn is_token_byte(b: u8) -> bool {
    matches!(b,
        b'!' | b'#' | b'$' | b'%' | b'&' | b'\'' | b'*' | b'+' | b'-' | b'.'
        | b'^' | b'_' | b'`' | b'|' | b'~')
        || b.is_ascii_alphanumeric()
}

impl HttpMessage {
    pub fn request(method: Method, target: impl Into<String>) -> Self {
        HttpMessage {
            start: StartLine::Request {
                method,
                target: target.into(),
            },
            headers: Vec::new(),
            body: Vec::new(),
        }
    }

    pub fn response(status: u16, reason: impl Into<String>) -> Self {
        HttpMessage {
            start: StartLine::Response {
                status,
                reason: reason.into(),
            },
            headers: Vec::new(),
            body: Vec::new(),
        }
    }

    pub fn with_header(mut self, name: impl Into<String>, value: impl Into<String>) -> Self {
        self.headers.push(Header {
            name: name.into(),
            value: value.into(),
        });
        self
    }

    /// Attach a body and set `Content-Length` to match.
    pub fn with_body(mut self, body: impl Into<Vec<u8>>) -> Self {
        self.body = body.into();
        self.set_header("Content-Length", self.body.len().to_string());
        self
    }

    /// Case-insensitive header lookup; first match wins.
    pub fn header(&self, name: &str) -> Option<&str> {
        self.headers
            .iter()
            .find(|h| h.name.eq_ignore_ascii_case(name))
            .map(|h| h.value.as_str())
    }

    /// Replace a header in place or append it.
    pub fn set_header(&mut self, name: &str, value: impl Into<String>) {
        let value = value.into();
        match self
            .headers
            .iter_mut()
            .find(|h| h.name.eq_ignore_ascii_case(name))
        {
            Some(h) => h.value = value,
            None => self.headers.push(Header {
                name: name.to_string(),
                value,
            }),
        }
    }

    pub fn remove_header(&mut self, name: &str) {
        self.headers.retain(|h| !h.name.eq_ignore_ascii_case(name));
    }

    pub fn status(&self) -> Option<u16> {
        match &self.start {
            StartLine::Response { status, .. } => Some(*status),
            StartLine::Request { .. } => None,
        }
    }

    pub fn method(&self) -> Option<Method> {
        match &self.start {
            StartLine::Request { method, .. } => Some(*method),
            StartLine::Response { .. } => None,
        }
    }

    pub fn target(&self) -> Option<&str> {
        match &self.start {
            StartLine::Request { target, .. } => Some(target.as_str()),
            StartLine::Response { .. } => None,
        }
    }

    /// Serialize with CRLF framing. A non-empty body without a declared
    /// `Content-Length` gets one appended so the invariant holds on the
    /// wire; responses we build always carry an explicit length.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(128 + self.body.len());
        match &self.start {
            StartLine::Request { method, target } => {
                out.extend_from_slice(method.as_str().as_bytes());
                out.push(b' ');
                out.extend_from_slice(target.as_bytes());
                out.extend_from_slice(b" HTTP/1.1\r\n");
            }
            StartLine::Response { status, reason } => {
                out.extend_from_slice(b"HTTP/1.1 ");
                out.extend_from_slice(status.to_string().as_bytes());
                out.push(b' ');
                out.extend_from_slice(reason.as_bytes());
                out.extend_from_slice(b"\r\n");
            }
        }
        let mut has_length = false;
        for h in &self.headers {
            if h.name.eq_ignore_ascii_case("content-length") {
                has_length = true;
            }
            out.extend_from_slice(h.name.as_bytes());
            out.extend_from_slice(b": ");
            out.extend_from_slice(h.value.as_bytes());
            out.extend_from_slice(b"\r\n");
        }
        if !has_length && !self.body.is_empty() {
            out.extend_from_slice(format!("Content-Length: {}\r\n", self.body.len()).as_bytes());
        }
        out.extend_from_slice(b"\r\n");
        out.extend_from_slice(&self.body);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mix::MixRng;

    fn parse_req(bytes: &[u8]) -> ParseOutcome {
        parse_message(bytes, Role::Request)
    }

    #[test]
    fn minimal_get() {
        let out = parse_req(b"GET /health HTTP/1.1\r\nHost: a\r\n\r\n");
        match out {
            ParseOutcome::Message(m) => {
                assert_eq!(m.method(), Some(Method::Get));
                assert_eq!(m.target(), Some("/health"));
                assert_eq!(m.headers.len(), 1);
                assert!(m.body.is_empty());
            }
            other => panic!("expected message, got {other:?}"),
        }
    }

    #[test]
    fn post_with_body() {
        let out = parse_req(b"POST /echo HTTP/1.1\r\nContent-Length: 5\r\n\r\nhello");
        match out {
            ParseOutcome::Message(m) => {
                assert_eq!(m.body, b"hello");
                assert_eq!(m.header("content-length"), Some("5"));
            }
            other => panic!("expected message, got {other:?}"),
        }
    }

    #[test]
    fn partial_is_need_more() {
        assert_eq!(parse_req(b"GET /x HTTP/1.1\r\nHost"), ParseOutcome::NeedMore);
        assert_eq!(
            parse_req(b"POST /e HTTP/1.1\r\nContent-Length: 10\r\n\r\nabc"),
            ParseOutcome::NeedMore
        );
        assert_eq!(parse_req(b""), ParseOutcome::NeedMore);
    }

    #[test]
    fn rejects_bad_start_lines() {
        for case in [
            &b"PUT /x HTTP/1.1\r\n\r\n"[..],
            b"GET /x HTTP/1.0\r\n\r\n",
            b"GET  /x HTTP/1.1\r\n\r\n",
            b"GET /x\r\n\r\n",
            b"\r\nGET /x HTTP/1.1\r\n\r\n",
            b"GET /x y HTTP/1.1\r\n\r\n",
        ] {
            assert!(
                matches!(parse_req(case), ParseOutcome::Error(_)),
                "accepted {case:?}"
            );
        }
    }

    #[test]
    fn rejects_bare_lf() {
        assert!(matches!(
            parse_req(b"GET /x HTTP/1.1\nHost: a\r\n\r\n"),
            ParseOutcome::Error(_)
        ));
    }

    #[test]
    fn oversize_header_line() {
        let mut req = b"GET /x HTTP/1.1\r\nX-Big: ".to_vec();
        req.extend(std::iter::repeat_n(b'a', 9 * 1024));
        req.extend_from_slice(b"\r\n\r\n");
        assert_eq!(
            parse_req(&req),
            ParseOutcome::Error(ParseError::OversizeLine(MAX_HEADER_LINE_BYTES))
        );
    }

    #[test]
    fn oversize_line_detected_before_terminator() {
        // No CRLF at all, but the cap is already blown.
        let req = vec![b'a'; MAX_START_LINE_BYTES + 10];
        assert!(matches!(parse_req(&req), ParseOutcome::Error(_)));
    }

    #[test]
    fn too_many_headers() {
        let mut req = b"GET /x HTTP/1.1\r\n".to_vec();
        for i in 0..=MAX_HEADERS {
            req.extend_from_slice(format!("H{i}: v\r\n").as_bytes());
        }
        req.extend_from_slice(b"\r\n");
        assert_eq!(parse_req(&req), ParseOutcome::Error(ParseError::TooManyHeaders));
    }

    #[test]
    fn content_length_rules() {
        assert_eq!(
            parse_req(b"POST /e HTTP/1.1\r\nContent-Length: 2\r\nContent-Length: 2\r\n\r\nab"),
            ParseOutcome::Error(ParseError::DuplicateContentLength)
        );
        assert_eq!(
            parse_req(b"POST /e HTTP/1.1\r\nContent-Length: 2x\r\n\r\nab"),
            ParseOutcome::Error(ParseError::MalformedContentLength)
        );
        assert_eq!(
            parse_req(b"POST /e HTTP/1.1\r\nContent-Length: 99999999999999\r\n\r\n"),
            ParseOutcome::Error(ParseError::OversizeBody)
        );
        assert_eq!(
            parse_req(b"POST /e HTTP/1.1\r\nTransfer-Encoding: chunked\r\n\r\n"),
            ParseOutcome::Error(ParseError::UnsupportedTransferEncoding)
        );
    }

    #[test]
    fn non_ascii_header_rejected() {
        assert_eq!(
            parse_req(b"GET /x HTTP/1.1\r\nX-N\xFFame: v\r\n\r\n"),
            ParseOutcome::Error(ParseError::NonAsciiHeader)
        );
    }

    #[test]
    fn response_parsing() {
        let out = parse_message(
            b"HTTP/1.1 200 OK\r\nContent-Length: 2\r\n\r\nok",
            Role::Response,
        );
        match out {
            ParseOutcome::Message(m) => {
                assert_eq!(m.status(), Some(200));
                assert_eq!(m.body, b"ok");
            }
            other => panic!("expected message, got {other:?}"),
        }
        assert!(matches!(
            parse_message(b"HTTP/1.1 999 ?\r\n\r\n", Role::Response),
            ParseOutcome::Error(_)
        ));
        assert!(matches!(
            parse_message(b"HTTP/1.1 20 OK\r\n\r\n", Role::Response),
            ParseOutcome::Error(_)
        ));
        // Empty reason phrase is legal.
        assert!(matches!(
            parse_message(b"HTTP/1.1 204\r\n\r\n", Role::Response),
            ParseOutcome::Message(_)
        ));
    }

    #[test]
    fn pipelined_messages_are_retained() {
        let mut p = MessageParser::new(Role::Request);
        let two = b"GET /a HTTP/1.1\r\n\r\nGET /b HTTP/1.1\r\n\r\n";
        let first = p.feed(two).unwrap().expect("first message");
        assert_eq!(first.target(), Some("/a"));
        let second = p.poll().unwrap().expect("second message");
        assert_eq!(second.target(), Some("/b"));
        assert_eq!(p.buffered(), 0);
    }

    #[test]
    fn serializer_round_trips() {
        let msg = HttpMessage::request(Method::Post, "/echo")
            .with_header("Host", "h")
            .with_body(b"payload".to_vec());
        let bytes = msg.to_bytes();
        match parse_req(&bytes) {
            ParseOutcome::Message(m) => assert_eq!(m, msg),
            other => panic!("round trip failed: {other:?}"),
        }
    }

    // Crash-freedom over structured-ish random inputs: every outcome must be
    // one of message/need-more/error, with no panic. The generator mixes raw
    // bytes with fragments likely to reach deep parser states.
    #[test]
    fn fuzz_never_panics() {
        let mut rng = MixRng::new(0x1234_5678);
        let fragments: &[&[u8]] = &[
            b"GET ",
            b"POST ",
            b"/echo ",
            b"HTTP/1.1",
            b"\r\n",
            b"\n",
            b"\r",
            b"Content-Length: ",
            b"Content-Length: 5\r\n",
            b"Host: a\r\n",
            b":",
            b" ",
            b"\x00",
            b"\xFF\xFE",
            b"0",
            b"99999999999999999999",
        ];
        for _ in 0..10_000 {
            let mut case = Vec::new();
            let pieces = 1 + rng.next_below(8);
            for _ in 0..pieces {
                if rng.next_unit() < 0.7 {
                    let f = fragments[rng.next_below(fragments.len() as u64) as usize];
                    case.extend_from_slice(f);
                } else {
                    let n = rng.next_below(24);
                    for _ in 0..n {
                        case.push((rng.next_u64() & 0xFF) as u8);
                    }
                }
            }
            let role = if rng.next_unit() < 0.5 { Role::Request } else { Role::Response };
            // Outcome is one of the three variants by type; what we verify
            // is that classification terminates without panicking, in both
            // one-shot and byte-at-a-time feeding.
            let one_shot = parse_message(&case, role);
            let mut incremental = MessageParser::new(role);
            let mut inc_outcome = ParseOutcome::NeedMore;
            for b in &case {
                match incremental.feed(std::slice::from_ref(b)) {
                    Ok(Some(m)) => {
                        inc_outcome = ParseOutcome::Message(m);
                        break;
                    }
                    Ok(None) => {}
                    Err(e) => {
                        inc_outcome = ParseOutcome::Error(e);
                        break;
                    }
                }
            }
            // Incremental and one-shot agree on the first outcome.
            match (&one_shot, &inc_outcome) {
                (ParseOutcome::Message(a), ParseOutcome::Message(b)) => assert_eq!(a, b),
                (ParseOutcome::Error(a), ParseOutcome::Error(b)) => assert_eq!(a, b),
                (ParseOutcome::NeedMore, ParseOutcome::NeedMore) => {}
                (a, b) => panic!("one-shot {a:?} vs incremental {b:?} for {case:?}"),
            }
        }
    }
}
