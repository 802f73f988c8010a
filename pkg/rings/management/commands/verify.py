from rings.management.base import RingCommand


class Command(RingCommand):
    help = (
        "Check bounds and equality conditions for one ring (--ring) or run the full catalog suite. "
        "Exits with status 1 on any violation."
    )
    verb = "verify"
    recordable = True
