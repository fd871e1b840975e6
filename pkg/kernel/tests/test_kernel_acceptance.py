"""Kernel acceptance: cross-cell state in the Urdu session.

Prints a scoreboard line like the primary package's acceptance suite.
The full wire-protocol variant runs only when ipykernel is installed;
without it, the in-process session (the same execution path the Jupyter
adapter delegates to) carries the criterion.
"""

from __future__ import annotations

import pytest

from unipy_kernel.session import KernelSession


@pytest.fixture
def report(capfd):
    def _report(name: str, ok: bool, detail: str = "") -> None:
        line = f"[acceptance] {name}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f"  ({detail})"
        with capfd.disabled():
            print(line, flush=True)

    return _report


def test_kernel_session_cross_cell_state(report):
    session = KernelSession("ur")
    problems = []
    first = session.execute_cell("x = ۲")
    if first.status != "ok":
        problems.append(f"cell 1 status {first.status}: {first.error_text}")
    second = session.execute_cell("لکھو(x)")
    if second.status != "ok":
        problems.append(f"cell 2 status {second.status}: {second.error_text}")
    if second.stdout != "2\n":
        problems.append(f"cell 2 printed {second.stdout!r}, wanted '2\\n'")
    ok = not problems
    report("kernel-session", ok, "" if ok else "; ".join(problems))
    assert ok, problems


def test_kernel_wire_protocol(tmp_path):
    pytest.importorskip(
        "ipykernel",
        reason="ipykernel not installed (jupyter extra); "
        "the in-process session test above covers the criterion",
    )
    pytest.importorskip("jupyter_client")
    import os
    import subprocess
    import sys

    from jupyter_client import BlockingKernelClient
    from jupyter_client.connect import write_connection_file

    connection_file, _ = write_connection_file(
        fname=str(tmp_path / "kernel.json")
    )
    env = {**os.environ, "UNIPY_LANGUAGE": "ur"}
    proc = subprocess.Popen(
        [sys.executable, "-m", "unipy_kernel", "-f", connection_file],
        env=env,
    )
    client = BlockingKernelClient(connection_file=connection_file)
    try:
        client.load_connection_file()
        client.start_channels()
        client.wait_for_ready(timeout=60)

        client.execute("x = ۲", reply=True, timeout=30)
        msg_id = client.execute("لکھو(x)")
        stdout = ""
        while True:
            msg = client.get_iopub_msg(timeout=30)
            if msg["parent_header"].get("msg_id") != msg_id:
                continue
            if msg["msg_type"] == "stream":
                stdout += msg["content"]["text"]
            if (
                msg["msg_type"] == "status"
                and msg["content"]["execution_state"] == "idle"
            ):
                break
        assert stdout == "2\n"
    finally:
        client.stop_channels()
        proc.terminate()
        proc.wait(timeout=10)
