import argparse
import asyncio
import logging
from abc import abstractmethod
from typing import Any

from typeguard import CollectionCheckStrategy, TypeCheckError, check_type

from app_interface import AppComponent

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


class BaseCommand(AppComponent):
    name: str

    def __init__(self, pub_queue: asyncio.Queue, args: argparse.Namespace):
        """
        One CLI subcommand, run as an App component.

        Results are published on "<name>/result"; the last message is always
        "app/exit" carrying the exit status.

        Args:
            pub_queue (asyncio.Queue): Queue for publishing messages to the App broker.
            args (argparse.Namespace): Parsed command-line arguments.
        """
        self.pub_queue = pub_queue
        self.args = args

    @abstractmethod
    async def execute(self) -> int:
        """
        Does the work of the command and emits its results.

        Returns:
            int: Exit status, EXIT_OK unless a check failed.
        """
        pass

    async def emit(self, payload: Any, shape: type, topic: str | None = None) -> None:
        check_type(payload, shape, collection_check_strategy=CollectionCheckStrategy.ALL_ITEMS)
        await self.publish(topic or f"{self.name}/result", payload)

    async def run(self) -> None:
        logger.info(f"running {self.name}")
        code = EXIT_ERROR
        try:
            code = await self.execute()
        except TypeCheckError as e:
            logger.error(f"{self.name} produced a malformed payload: {e}")
            await self.publish("app/error", f"internal error: {e}")
        except (ValueError, RuntimeError) as e:
            logger.error(f"{self.name} failed: {e}")
            await self.publish("app/error", str(e))
        finally:
            await self.publish("app/exit", code)
