from rings.management.base import RingCommand


class Command(RingCommand):
    help = "Evaluate every applicable zp_k bound for a ring and flag which ones are attained."
    verb = "bounds"
