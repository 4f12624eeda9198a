"""Walk through one log file: parse, validate, flatten, drill down.

Run from the repository root:

    python demos/01_explore_log.py
"""

from pathlib import Path

from xel import detail_of_event, parse_xel, project_classic, steps_of_activity, validate

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "sample-order.xel"

log = parse_xel(FIXTURE.read_bytes())
report = validate(log)
print(f"loaded {FIXTURE.name}: {len(log.cases)} cases, {log.total_events} events,")
print(f"  {log.total_step_instances} step instances, {len(log.objects)} business objects")
print(f"  validation: {len(report.errors)} errors, {len(report.warnings)} warnings")

print("\nclassic flat view (what a traditional miner sees):")
for row in project_classic(log):
    print(f"  {row.case_id}  {row.activity:<16} {row.start:%Y-%m-%d %H:%M} .. {row.end:%H:%M}")

print("\nsteps that complete the 'Register Order' task:")
for step in steps_of_activity(log, "register"):
    print(f"  {step.ordinal}. {step.name}")

print("\nfull drill-down of event E1 (who touched what, on which screen):")
detail = detail_of_event(log, "E1")
for step in detail.steps:
    players = ", ".join(
        f"{ref.class_name} {ref.obj.attributes.get('name', ref.obj.attributes.get('title', ref.obj.id))}"
        f" as {ref.role}"
        for ref in step.objects
    )
    print(f"  {step.step.ordinal}. {step.step.name} @ {step.instance.timestamp:%H:%M:%S} -- {players}")
