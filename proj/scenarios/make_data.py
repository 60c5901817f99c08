#!/usr/bin/env python3
"""Deterministic generator for the bundled scenario data (trajectory and
human-motion CSV files). Rerunning reproduces the files byte-for-byte."""

import math
import os

HERE = os.path.dirname(os.path.abspath(__file__))
RATE = 30.0  # trace sample rate, Hz
DURATION = 12.5  # s


def write_trajectory():
    rows = [
        (0.0, [0.00, -0.40, 0.70, 0.00, 0.50, 0.00]),
        (2.0, [0.45, 0.45, 0.25, 0.20, 0.50, 0.40]),
        (4.0, [1.40, -0.10, 0.60, -0.20, 0.30, -0.40]),
        (6.0, [-1.20, 0.30, 0.40, 0.30, 0.40, 0.30]),
        (8.0, [0.00, -0.40, 0.70, 0.00, 0.50, 0.00]),
    ]
    with open(os.path.join(HERE, "traj_pick_place.csv"), "w") as f:
        f.write("time_s,q0,q1,q2,q3,q4,q5\n")
        for t, q in rows:
            f.write("%.6f,%s\n" % (t, ",".join("%.6f" % v for v in q)))


def smooth(t, t0, t1):
    """0 before t0, 1 after t1, smoothstep in between."""
    if t <= t0:
        return 0.0
    if t >= t1:
        return 1.0
    u = (t - t0) / (t1 - t0)
    return u * u * (3.0 - 2.0 * u)


def lerp(a, b, w):
    return tuple(a[i] + (b[i] - a[i]) * w for i in range(3))


def body(x, y, reach_r=None, reach_l=None):
    """Capsules for one standing human at (x, y) facing -x (the robot).
    reach_r / reach_l override the hand target (world point) to pose an arm."""
    parts = {}
    parts["head"] = ((x, y, 1.30), (x, y, 1.45), 0.10)
    parts["neck"] = ((x, y, 1.20), (x, y, 1.30), 0.06)
    parts["torso"] = ((x, y, 0.60), (x, y, 1.18), 0.18)
    parts["pelvis"] = ((x, y, 0.50), (x, y, 0.60), 0.16)
    for side, sign, reach in (("l", 1.0, reach_l), ("r", -1.0, reach_r)):
        shoulder = (x, y + sign * 0.20, 1.12)
        if reach is None:
            elbow = (x, y + sign * 0.24, 0.82)
            wrist = (x + 0.05, y + sign * 0.26, 0.56)
        else:
            elbow = lerp(shoulder, reach, 0.45)
            wrist = reach
        hand_tip = (wrist[0] - 0.06, wrist[1], wrist[2] - 0.03)
        parts[side + "_upper_arm"] = (shoulder, elbow, 0.055)
        parts[side + "_lower_arm"] = (elbow, wrist, 0.045)
        parts[side + "_hand"] = (wrist, hand_tip, 0.05)
    for side, sign in (("l", 1.0), ("r", -1.0)):
        hip = (x, y + sign * 0.10, 0.52)
        knee = (x + 0.02, y + sign * 0.11, 0.30)
        ankle = (x + 0.02, y + sign * 0.11, 0.09)
        toe = (x - 0.10, y + sign * 0.11, 0.06)
        parts[side + "_upper_leg"] = (hip, knee, 0.08)
        parts[side + "_lower_leg"] = (knee, ankle, 0.06)
        parts[side + "_foot"] = (ankle, toe, 0.045)
    return parts


def write_trace(name, frame_fn, humans=1):
    n = int(DURATION * RATE) + 1
    with open(os.path.join(HERE, name), "w") as f:
        f.write("time_s,human_id,part_id,p1x,p1y,p1z,p2x,p2y,p2z,radius_m\n")
        for k in range(n):
            t = k / RATE
            for hid in range(humans):
                for pid, (p1, p2, r) in sorted(frame_fn(t, hid).items()):
                    f.write(
                        "%.6f,%d,%s,%s,%s,%.4f\n"
                        % (
                            t,
                            hid,
                            pid,
                            ",".join("%.5f" % v for v in p1),
                            ",".join("%.5f" % v for v in p2),
                            r,
                        )
                    )


def crossing(t, hid):
    # walk across the cell behind the table, arms down (0.30 m/s)
    y = -1.8 + 0.30 * t
    return body(1.05, y)


def table_work(t, hid):
    # hands move onto the table edge for two work bouts, then retract
    w = max(
        smooth(t, 2.0, 2.8) - smooth(t, 5.0, 5.8),
        smooth(t, 8.0, 8.8) - smooth(t, 11.0, 11.8),
    )
    wobble = 0.02 * math.sin(2.0 * math.pi * 0.5 * t)
    rest_r = (1.00, -0.26, 0.56)
    rest_l = (1.00, 0.26, 0.56)
    on_table_r = (0.80, -0.18, 0.38 + wobble)
    on_table_l = (0.80, 0.18, 0.38 - wobble)
    return body(
        1.10,
        0.0,
        reach_r=lerp(rest_r, on_table_r, w),
        reach_l=lerp(rest_l, on_table_l, w),
    )


def handover(t, hid):
    # periodic reach high into the cell, well above the table
    w = max(
        smooth(t, 2.0, 2.9) - smooth(t, 4.5, 5.4),
        smooth(t, 7.5, 8.4) - smooth(t, 10.0, 10.9),
    )
    rest = (0.95, 0.30, 0.62)
    out = (0.58, 0.30, 0.85)
    return body(1.05, 0.55, reach_r=lerp(rest, out, w))


def dual(t, hid):
    # two people flanking the table, reaching in alternately
    if hid == 0:
        w = smooth(t, 1.5, 2.4) - smooth(t, 5.5, 6.4)
        rest = (0.95, 0.40, 0.60)
        out = (0.62, 0.28, 0.58)
        return body(1.05, 0.62, reach_r=lerp(rest, out, w))
    w = smooth(t, 6.5, 7.4) - smooth(t, 10.5, 11.4)
    rest = (0.95, -0.40, 0.60)
    out = (0.62, -0.28, 0.58)
    return body(1.05, -0.62, reach_l=lerp(rest, out, w))


def far_observer(t, hid):
    sway = 0.03 * math.sin(2.0 * math.pi * 0.25 * t)
    return body(2.20, 0.50 + sway)


def main():
    write_trajectory()
    write_trace("trace_crossing.csv", crossing)
    write_trace("trace_table_work.csv", table_work)
    write_trace("trace_handover.csv", handover)
    write_trace("trace_dual.csv", dual, humans=2)
    write_trace("trace_far.csv", far_observer)


if __name__ == "__main__":
    main()
