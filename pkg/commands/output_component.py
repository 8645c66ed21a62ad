import asyncio
import json
import logging
import sys
from typing import Any, TextIO

from app_interface import AppComponent

logger = logging.getLogger(__name__)


def _vector(values: list) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def render_text(topic: str, payload: Any) -> str:
    """Human-readable rendering of one command result."""
    match topic:
        case "classify/result":
            value = "" if payload["lpValue"] is None else f" (LP value {payload['lpValue']})"
            return f"{payload['kind']}{value}"
        case "solve/result":
            if payload["profile"] is not None:
                return f"{payload['rule']}: {_vector(payload['profile'])}"
            lines = [f"{payload['kind']} problem, {len(payload['divisions'])} competitive division(s)"]
            for k, (d, maximal) in enumerate(zip(payload["divisions"], payload["maximalFace"]), start=1):
                lines.append(f"division {k}: profile {_vector(d['profile'])}, budget {d['budget']}")
                lines.append(f"  prices {_vector(d['prices'])}")
                for row in d["allocation"]:
                    lines.append(f"  {_vector(row)}")
                if not maximal:
                    lines.append("  (not on a face of maximal dimension)")
            return "\n".join(lines)
        case "verify/result":
            lines = []
            for name, ok in payload["checks"].items():
                detail = payload["details"].get(name)
                lines.append(f"{name:<12} {'pass' if ok else 'FAIL'}" + (f"  {detail}" if detail else ""))
            return "\n".join(lines)
        case "sweep/result":
            lines = [f"{'value':>6}  {'kind':<9} {'count':>5} {'vertices':>8}  profiles"]
            for row in payload["rows"]:
                if row["error"] is not None:
                    lines.append(f"{row['value']:>6}  error: {row['error']}")
                    continue
                flag = " *" if row["vertexAllocations"] != row["count"] else ""
                profiles = " ".join(_vector(p) for p in row["profiles"])
                lines.append(
                    f"{row['value']:>6}  {row['kind']:<9} {row['count']:>5} {row['vertexAllocations']:>8}  {profiles}{flag}"
                )
            lines.append(f"counts: {payload['counts']}")
            return "\n".join(lines)
        case "oracle/result":
            lines = [f"grid   {_vector([f'{x:.9f}' for x in c])}" for c in payload["clusters"]]
            lines += [f"exact  {_vector(p)}" for p in payload["exact"]]
            lines.append("matched" if payload["matched"] else "MISMATCH")
            return "\n".join(lines)
        case "random/result":
            extra = "" if payload["divisions"] is None else f", {payload['divisions']} divisions"
            return f"seed {payload['seed']}: {payload['kind']}{extra}\n" + json.dumps(payload["problem"])
        case "report/result":
            if payload["output"]:
                return f"wrote {payload['format']} report to {payload['output']}"
            return payload["content"].rstrip("\n")
        case _:
            return json.dumps(payload)


class OutputComponent(AppComponent):
    def __init__(self, sub_queue: asyncio.Queue, json_mode: bool = False, stream: TextIO | None = None):
        """
        Prints the messages routed to it until the App announces the exit status.

        Args:
            sub_queue (asyncio.Queue): Queue receiving result, error and exit messages.
            json_mode (bool, optional): Print each result as one JSON document. Defaults to False.
            stream (TextIO | None, optional): Destination of results. Defaults to stdout.
        """
        self.sub_queue = sub_queue
        self.json_mode = json_mode
        self.stream = stream
        self.exit_code: int | None = None

    async def run(self) -> None:
        stream = self.stream or sys.stdout
        while True:
            data = await self.sub_queue.get()
            match data["topic"]:
                case "app/exit":
                    self.exit_code = data["payload"]
                    return
                case "app/error":
                    print(f"error: {data['payload']}", file=sys.stderr)
                case topic if self.json_mode:
                    print(json.dumps(data["payload"]), file=stream)
                case topic:
                    print(render_text(topic, data["payload"]), file=stream)
