import asyncio
from abc import ABC, abstractmethod
from typing import Any


class AppComponent(ABC):
    """A unit started by the App; components exchange Message dicts through queues."""

    pub_queue: asyncio.Queue

    @abstractmethod
    async def run(self) -> None: ...

    async def publish(self, topic: str, payload: Any) -> None:
        await self.pub_queue.put({"topic": topic, "payload": payload})
