import argparse
import asyncio
import logging
import sys
from collections import defaultdict

from typeguard import TypeCheckError, check_type

from app_interface import AppComponent
from commands import COMMANDS, EXIT_ERROR, OutputComponent
from oracle.oracle_config import DEFAULT_RESOLUTION, DEFAULT_TOLERANCE
from type_defs import (
    ClassificationPayload,
    Message,
    OraclePayload,
    RandomPayload,
    ReportPayload,
    SolvePayload,
    SweepPayload,
    VerifyPayload,
)

logger = logging.getLogger(__name__)

RESULT_PAYLOADS = {
    "classify/result": ClassificationPayload,
    "solve/result": SolvePayload,
    "verify/result": VerifyPayload,
    "sweep/result": SweepPayload,
    "oracle/result": OraclePayload,
    "random/result": RandomPayload,
    "report/result": ReportPayload,
}


class App:
    def __init__(self, *deps: AppComponent, pub_queue: asyncio.Queue) -> None:
        """
        Runs one command component next to the output component and routes messages between them.

        Args:
            *deps: AppComponent instances to run.
            pub_queue (asyncio.Queue): Central queue where all components publish messages.
        """
        self.deps = deps
        self.pub_queue = pub_queue
        self.subs: dict[str, list[asyncio.Queue]] = defaultdict(lambda: [])

    def registerSub(self, topics: list[str], sub_queue: asyncio.Queue) -> None:
        for topic in topics:
            if sub_queue in self.subs[topic]:
                logger.warning(f"This queue is already subscribed to {topic}: {sub_queue}")
                continue
            self.subs[topic].append(sub_queue)
        logger.debug(f"added subscriber to topics: {topics}")

    def forward(self, data: Message) -> None:
        for queue in self.subs.get(data["topic"], []):
            queue.put_nowait(data)

    async def broker(self) -> int:
        """
        Routes messages to subscribers until a command announces its exit status.

        Returns:
            int: The exit status published on "app/exit".
        """
        while True:
            data = await self.pub_queue.get()
            try:
                check_type(data, Message)
                match data["topic"]:
                    case "app/exit":
                        check_type(data["payload"], int)
                        self.forward(data)
                        return data["payload"]
                    case topic if topic in RESULT_PAYLOADS:
                        check_type(data["payload"], RESULT_PAYLOADS[topic])
                        self.forward(data)
                    case _:
                        self.forward(data)
            except TypeCheckError as e:
                logger.warning(f"Invalid message format: {data} -> {e}")

    async def run(self) -> int:
        results = await asyncio.gather(*[dep.run() for dep in self.deps], self.broker())
        return results[-1]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit one JSON document per result")
    common.add_argument("--verbose", action="store_true", help="Log debug messages to stderr")

    parser = argparse.ArgumentParser(description="Exact competitive division of mixed manna.")
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser("classify", parents=[common], help="Positive, negative or null")
    classify.add_argument("file", help="Problem JSON file")

    solve = sub.add_parser("solve", parents=[common], help="Competitive divisions or a baseline profile")
    solve.add_argument("file", help="Problem JSON file")
    solve.add_argument("--rule", choices=["cr", "er", "fs"], default="cr")

    verify = sub.add_parser("verify", parents=[common], help="Check a division against every property")
    verify.add_argument("file", help="Problem JSON file")
    verify.add_argument("division", help="Division JSON file")

    sweep = sub.add_parser("sweep", parents=[common], help="Solve a one-parameter family of problems")
    sweep.add_argument("file", nargs="?", help="Sweep JSON file (defaults to the built-in family)")

    oracle = sub.add_parser("oracle", parents=[common], help="Cross-check the negative solver on a weight grid")
    oracle.add_argument("file", help="Problem JSON file")
    oracle.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    oracle.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)

    random = sub.add_parser("random", parents=[common], help="Generate a random problem")
    random.add_argument("--agents", type=int, default=2)
    random.add_argument("--items", type=int, default=3)
    random.add_argument("--seed", type=int, default=0)
    random.add_argument("--mix", type=float, default=0.5, help="Probability of an all-negative column")
    random.add_argument("--min-divisions", type=int, help="Search seeds for a negative problem with this many divisions")
    random.add_argument("--output", help="Write the problem JSON here")

    report = sub.add_parser("report", parents=[common], help="Two-agent frontier with CR, ER and FS points")
    report.add_argument("file", help="Problem JSON file")
    report.add_argument("--format", choices=["csv", "svg"], default="csv")
    report.add_argument("--output", help="Write the report here instead of stdout")
    return parser


async def run_command(args: argparse.Namespace) -> int:
    # === Initialize App queues ===
    app_pub_queue = asyncio.Queue()
    output_sub_queue = asyncio.Queue()

    command = COMMANDS[args.command](pub_queue=app_pub_queue, args=args)
    output = OutputComponent(output_sub_queue, json_mode=args.json)
    app = App(command, output, pub_queue=app_pub_queue)

    # === Add subscriptions ===
    app.registerSub([*RESULT_PAYLOADS, "app/error", "app/exit"], output_sub_queue)
    return await app.run()


def main(argv: list[str] | None = None) -> int:
    # === Command-line arguments ===
    args = build_parser().parse_args(argv)

    # === Logging settings ===
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)-7s %(name)-35s %(message)s",
        stream=sys.stderr,
    )

    try:
        return asyncio.run(run_command(args))
    except KeyboardInterrupt:
        logger.info("interrupted")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
