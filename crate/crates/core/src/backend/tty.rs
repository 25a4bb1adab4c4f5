//! Raw-mode and size queries on the controlling terminal (POSIX only).

use std::io;

use super::TerminalSize;

pub(crate) fn is_terminal() -> bool {
    // SAFETY: isatty only inspects the descriptor.
    unsafe { libc::isatty(libc::STDIN_FILENO) == 1 && libc::isatty(libc::STDOUT_FILENO) == 1 }
}

pub(crate) fn window_size() -> Option<TerminalSize> {
    // SAFETY: winsize is plain data and TIOCGWINSZ fills it in.
    unsafe {
        let mut ws: libc::winsize = std::mem::zeroed();
        if libc::ioctl(libc::STDOUT_FILENO, libc::TIOCGWINSZ, &mut ws) == 0 && ws.ws_row > 0 && ws.ws_col > 0 {
            Some(TerminalSize::new(ws.ws_col, ws.ws_row))
        } else {
            None
        }
    }
}

/// Saved terminal attributes; restoring them leaves raw mode.
pub(crate) struct RawMode {
    saved: libc::termios,
}

impl RawMode {
    pub(crate) fn enable() -> io::Result<RawMode> {
        // SAFETY: termios is plain data; tcgetattr/tcsetattr on stdin.
        unsafe {
            let mut saved: libc::termios = std::mem::zeroed();
            if libc::tcgetattr(libc::STDIN_FILENO, &mut saved) != 0 {
                return Err(io::Error::last_os_error());
            }
            let mut raw = saved;
            raw.c_iflag &= !(libc::IXON | libc::ICRNL | libc::BRKINT | libc::INPCK | libc::ISTRIP);
            raw.c_oflag &= !libc::OPOST;
            raw.c_lflag &= !(libc::ECHO | libc::ICANON | libc::IEXTEN);
            raw.c_cflag |= libc::CS8;
            raw.c_cc[libc::VMIN] = 0;
            raw.c_cc[libc::VTIME] = 0;
            if libc::tcsetattr(libc::STDIN_FILENO, libc::TCSAFLUSH, &raw) != 0 {
                return Err(io::Error::last_os_error());
            }
            Ok(RawMode { saved })
        }
    }

    pub(crate) fn restore(&self) {
        // SAFETY: restores attributes captured in enable().
        unsafe {
            libc::tcsetattr(libc::STDIN_FILENO, libc::TCSAFLUSH, &self.saved);
        }
    }
}

/// Waits up to `timeout_ms` for stdin and reads whatever is available.
pub(crate) fn read_stdin(timeout_ms: u64, out: &mut Vec<u8>) -> io::Result<usize> {
    let mut pfd = libc::pollfd { fd: libc::STDIN_FILENO, events: libc::POLLIN, revents: 0 };
    let timeout = timeout_ms.min(i32::MAX as u64) as i32;
    // SAFETY: one valid pollfd.
    let ready = unsafe { libc::poll(&mut pfd, 1, timeout) };
    if ready < 0 {
        let err = io::Error::last_os_error();
        if err.kind() == io::ErrorKind::Interrupted {
            return Ok(0);
        }
        return Err(err);
    }
    if ready == 0 {
        return Ok(0);
    }
    let mut buf = [0u8; 1024];
    // SAFETY: buf is writable for its length.
    let n = unsafe { libc::read(libc::STDIN_FILENO, buf.as_mut_ptr().cast(), buf.len()) };
    if n < 0 {
        let err = io::Error::last_os_error();
        if matches!(err.kind(), io::ErrorKind::Interrupted | io::ErrorKind::WouldBlock) {
            return Ok(0);
        }
        return Err(err);
    }
    out.extend_from_slice(&buf[..n as usize]);
    Ok(n as usize)
}
