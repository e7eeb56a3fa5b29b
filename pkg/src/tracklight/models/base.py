from __future__ import annotations

from dataclasses import dataclass

from tracklight.exceptions import StateError


@dataclass(frozen=True)
class ModelState:
    fitted: bool = False
    source_framerate: float | None = None
    source_player_ids: tuple[str, ...] = ()


class BaseModel:
    """Shared fit/query bookkeeping. Subclasses call ``_set_state`` in ``fit``
    and ``_check_fitted`` at the top of every query."""

    def __init__(self):
        self._state = ModelState()

    @property
    def state(self) -> ModelState:
        return self._state

    @property
    def is_fitted(self) -> bool:
        return self._state.fitted

    def _set_state(self, framerate: float, player_ids) -> None:
        self._state = ModelState(True, float(framerate), tuple(player_ids))

    def _check_fitted(self) -> None:
        if not self._state.fitted:
            raise StateError(f"{type(self).__name__} is not fitted; call fit() first")
