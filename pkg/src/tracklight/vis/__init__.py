from tracklight.vis.svg import (
    RenderStyle,
    render_pitch,
    render_positions,
    render_trajectories,
    view_box,
)

__all__ = ["RenderStyle", "render_pitch", "render_positions", "render_trajectories", "view_box"]
