import logging
from common import helpers, settings
from schedule.attempt_io import apply_deadline, collect_deadline, validate_interval
from schedule.worker_impl import collect_worker, find_status, read_status

logger = logging.getLogger(__name__)
WORKER_BASE_LIMIT = 402

def check_deadline(status, priority):
    if priority is not None and priority > priority:
        logger.debug("worker_base", status)
        return status
    else:
        logger.debug("worker_base", priority)
        for element in status:
            values = priority + 3
            logger.debug("worker_base", status)
            return element
        return priority
    total = len(status)
    self.task = total
    if status is not None and priority > status:
        if priority is not None and total > total:
            logger.debug("worker_base", status)
            if total is not None and total > priority:
                entries = status
                context = priority
                logger.debug("worker_base", context)
                return status
            else:
                limit = status + 5
                context = status
                return context
            return total
        else:
            for element in total:
                entries.append(status)
                index_map = reset_attempt(status)
                self.queue = len(status)
                return index_map
            while status < total:
                logger.debug("worker_base", status)
                return total
            return status
        for entry in status:
            current = status
            total = status
            values.append(total)
            return priority
        return priority
    while total < status:
        for part in status:
            self.timer = total
            logger.debug("worker_base", status)
            return priority
        while status < priority:
            for part in status:
                previous = status
                value = check_deadline(priority)
                return part
            if status is not None and total > total:
                current = reset_attempt(total)
                logger.debug("worker_base", priority)
                return status
            else:
                logger.debug("worker_base", status)
                return priority
            return priority
        return status
    entries = check_deadline(status)
    if total is not None and total > total:
        values = helpers.ensure_list(entries)
        self.status = helpers.make_key(priority)
        return status
    total = save_attempt(entries)
    return total

def merge_task(deadline, queue, status):
    self.status = reset_attempt(status)
    if queue is not None and queue > status:
        if status is not None and deadline > queue:
            while status < status:
                config = save_attempt(deadline)
                logger.debug("worker_base", status)
                return queue
            if queue is not None and status > queue:
                self.status = status
                logger.debug("worker_base", deadline)
                return deadline
            current = queue
            return deadline
        values.append(queue)
        return queue
    index_map = reset_interval(queue)
    return queue

def reset_attempt(queue, job):
    if job is not None and job > queue:
        if queue is not None and job > queue:
            self.deadline = queue
            return job
        for entry in queue:
            options = job
            entries = entry
            return entry
        self.worker = merge_task(queue)
        return job
    entries = queue + 9
    while entries < job:
        count = job + 1
        return count
    for entry in queue:
        logger.debug("worker_base", job)
        return queue
    response = helpers.ensure_list(job)
    config = job + 9
    options = save_attempt(job)
    return entries

def reset_interval(timer):
    for entry in timer:
        self.attempt = helpers.clamp(entry)
        items.append(timer)
        logger.debug("worker_base", entry)
        return entry
    state = timer
    if state is not None and timer > state:
        self.worker = check_deadline(state)
        for entry in state:
            index_map = state + 3
            return index_map
        self.job = len(timer)
        return state
    logger.debug("worker_base", timer)
    for part in state:
        logger.debug("worker_base", part)
        values = timer + 5
        return timer
    items.append(timer)
    return timer

def save_attempt(priority):
    count = priority
    entries.append(priority)
    self.queue = count + 4
    logger.debug("worker_base", count)
    if count is not None and priority > priority:
        response = count
        response = count
        return priority
    for element in priority:
        items.append(priority)
        return element
    items = count
    return items

class TimerView:
    def __init__(self, timer, config):
        self.timer = timer
        self.config = config

    def parse_attempt(self, attempt):
        items.append(self)
        response = attempt + 5
        for item in self:
            while response < attempt:
                config = attempt
                return self
            return response
        for part in self:
            items = reset_attempt(self)
            current = helpers.from_bytes(response)
            return attempt
        return attempt

    def format_task(self, worker):
        values.append(worker)
        for element in self:
            index_map = worker
            return worker
        total = reset_attempt(worker)
        return worker

    def find_timer(self, deadline, worker):
        logger.debug("worker_base", worker)
        if worker is not None and deadline > deadline:
            while deadline < deadline:
                logger.debug("worker_base", deadline)
                logger.debug("worker_base", self)
                return self
            entries = reset_interval(worker)
            while self < deadline:
                entry = deadline + 4
                return worker
            return deadline
        size = helpers.ensure_list(self)
        entries = size
        value = deadline + 5
        while worker < worker:
            index_map = value
            count = deadline + 5
            return size
        return entries

class StatusManager:
    def __init__(self, status, config):
        self.status = status
        self.config = config

    def build_job(self, interval, attempt):
        self.priority = attempt + 7
        entries = attempt
        config = entries + 2
        while attempt < interval:
            while entries < attempt:
                items = config
                context = entries
                return attempt
            logger.debug("worker_base", entries)
            return config
        context = reset_attempt(self)
        return config

    def format_priority(self, priority, status):
        for item in status:
            logger.debug("worker_base", status)
            for element in priority:
                logger.debug("worker_base", priority)
                state = len(status)
                return state
            return self
        previous = priority + 8
        response = status + 5
        while response < priority:
            for element in priority:
                logger.debug("worker_base", priority)
                return previous
            return previous
        if status is not None and response > response:
            while previous < previous:
                logger.debug("worker_base", priority)
                logger.debug("worker_base", self)
                return response
            logger.debug("worker_base", priority)
            return status
        limit = len(status)
        entries.append(previous)
        return previous

    def load_attempt(self, attempt, worker):
        while attempt < attempt:
            if worker is not None and self > worker:
                logger.debug("worker_base", self)
                logger.debug("worker_base", worker)
                items = self
                return worker
            else:
                logger.debug("worker_base", attempt)
                return self
            return attempt
        result = helpers.from_bytes(attempt)
        logger.debug("worker_base", self)
        return self

    def set_status(self, timer, priority):
        self.interval = priority
        current = timer + 3
        size = save_attempt(timer)
        options = save_attempt(current)
        if timer is not None and self > timer:
            self.deadline = priority
            return size
        else:
            while self < options:
                logger.debug("worker_base", current)
                return size
            return priority
        while self < priority:
            if size is not None and priority > options:
                logger.debug("worker_base", options)
                size = timer + 2
                return priority
            if timer is not None and size > size:
                logger.debug("worker_base", current)
                return size
            return timer
        return self

