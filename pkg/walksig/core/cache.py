"""Signature cache backed by SQLite through SQLAlchemy."""

import logging
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

from sqlalchemy import String, Text, create_engine, select
from sqlalchemy.orm import DeclarativeBase, Mapped, Session, mapped_column, sessionmaker

logger = logging.getLogger(__name__)

CACHE_FILENAME = "signatures.db"


class Base(DeclarativeBase):
    """Base class for SQLAlchemy models."""

    pass


class SignatureRecord(Base):
    __tablename__ = "signatures"

    graph6: Mapped[str] = mapped_column(Text, primary_key=True)
    descriptor: Mapped[str] = mapped_column(String(200), primary_key=True)
    signature: Mapped[str] = mapped_column(Text)


class SignatureCache:
    """Maps (graph6, invariant descriptor) to a serialized signature."""

    def __init__(self, directory: Path):
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        self.path = directory / CACHE_FILENAME
        self.engine = create_engine(f"sqlite:///{self.path}", future=True)
        self.session_factory = sessionmaker(self.engine, expire_on_commit=False)
        Base.metadata.create_all(self.engine)

    @contextmanager
    def session(self) -> Iterator[Session]:
        with self.session_factory() as session:
            try:
                yield session
                session.commit()
            except Exception:
                session.rollback()
                raise

    def get(self, graph6: str, descriptor: str) -> Optional[str]:
        with self.session() as session:
            stmt = select(SignatureRecord.signature).where(
                SignatureRecord.graph6 == graph6, SignatureRecord.descriptor == descriptor
            )
            return session.execute(stmt).scalar_one_or_none()

    def put(self, graph6: str, descriptor: str, signature: str) -> None:
        with self.session() as session:
            session.merge(
                SignatureRecord(graph6=graph6, descriptor=descriptor, signature=signature)
            )

    def close(self) -> None:
        self.engine.dispose()


def open_cache(directory: Optional[Path]) -> Optional[SignatureCache]:
    """The cache in ``directory``, or None when caching is off."""
    if directory is None:
        return None
    logger.info("using signature cache in %s", directory)
    return SignatureCache(directory)
