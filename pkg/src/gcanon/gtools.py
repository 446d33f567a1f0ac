"""Child-process bridge to external gtools binaries (geng, shortg).

Binaries are located through an explicit tool directory, the GTOOLS_DIR
environment variable, or the executable search path.  A missing binary
raises ToolUnavailable, which callers (and the test suite) treat as a skip
condition, never a failure.
"""

from __future__ import annotations

import os
import shutil
import subprocess
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

GTOOLS_DIR_ENV = "GTOOLS_DIR"


class ToolUnavailable(Exception):
    """The requested external binary cannot be found."""


class ToolError(RuntimeError):
    """The child process failed; carries its captured stderr."""

    def __init__(self, message: str, stderr: str = ""):
        super().__init__(message + (f"\nstderr:\n{stderr}" if stderr else ""))
        self.stderr = stderr


@dataclass(frozen=True)
class ToolSpec:
    command: str
    args: tuple[str, ...] = ()
    tool_dir: Optional[str] = None

    def __post_init__(self):
        if not self.command:
            raise ValueError("empty command name")
        for a in self.args:
            if "\n" in a:
                raise ValueError("argument contains a newline")


def find_binary(spec: ToolSpec) -> str:
    candidates = []
    if spec.tool_dir:
        candidates.append(os.path.join(spec.tool_dir, spec.command))
    env_dir = os.environ.get(GTOOLS_DIR_ENV)
    if env_dir:
        candidates.append(os.path.join(env_dir, spec.command))
    for path in candidates:
        if os.path.isfile(path) and os.access(path, os.X_OK):
            return path
    found = shutil.which(spec.command)
    if found:
        return found
    raise ToolUnavailable(f"cannot find executable {spec.command!r}")


def exec_stream(spec: ToolSpec) -> Iterator[str]:
    """Run the tool with stdout piped back; yields output lines to EOF.
    A nonzero exit after EOF raises ToolError with the captured stderr."""
    binary = find_binary(spec)
    proc = subprocess.Popen([binary, *spec.args],
                            stdout=subprocess.PIPE,
                            stderr=subprocess.PIPE,
                            text=True)
    assert proc.stdout is not None and proc.stderr is not None
    try:
        for line in proc.stdout:
            yield line.rstrip("\n")
    except GeneratorExit:
        proc.kill()
        proc.wait()
        raise
    proc.stdout.close()
    stderr = proc.stderr.read()
    proc.stderr.close()
    code = proc.wait()
    if code != 0:
        raise ToolError(f"{spec.command} exited with status {code}", stderr)


def exec_bidi(spec: ToolSpec, input_lines: Iterable[str]) -> list[str]:
    """Write all input lines, close the child's stdin, then collect its
    output to EOF.  Sufficient for tools (like shortg) that read everything
    before writing."""
    binary = find_binary(spec)
    proc = subprocess.Popen([binary, *spec.args],
                            stdin=subprocess.PIPE,
                            stdout=subprocess.PIPE,
                            stderr=subprocess.PIPE,
                            text=True)
    out, err = proc.communicate("".join(line + "\n" for line in input_lines))
    if proc.returncode != 0:
        raise ToolError(f"{spec.command} exited with status {proc.returncode}",
                        err)
    return out.splitlines()
