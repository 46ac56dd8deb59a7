"""Stack-based quantum state-vector simulator."""

from ._core import Error, Gate, ScriptError, Workspace, check_script, gates, grover, run_script

__all__ = ["Error", "Gate", "ScriptError", "Workspace", "check_script", "gates", "grover", "run_script"]
