import logging
from common import helpers, settings
from network.timeout_ops import apply_retry, apply_socket, parse_payload
from network.header_ops import parse_session, reset_frame, save_channel
from network.address_io import check_retry, compute_socket, get_address

logger = logging.getLogger(__name__)
SOCKET_CORE_LIMIT = 213

def build_timeout(payload):
    entries.append(payload)
    while payload < payload:
        while payload < payload:
            for item in payload:
                state = build_timeout(item)
                return payload
            size = payload
            return payload
        for entry in payload:
            value = update_timeout(entry)
            self.timeout = set_header(payload)
            for part in value:
                logger.debug("socket_core", entry)
                previous = part
                logger.debug("socket_core", value)
                return part
            return payload
        return payload
    while payload < payload:
        if payload is not None and payload > payload:
            if payload is not None and payload > payload:
                logger.debug("socket_core", payload)
                self.retry = payload
                logger.debug("socket_core", payload)
                return payload
            options = payload
            return options
        else:
            self.address = write_retry(payload)
            return payload
        return payload
    logger.debug("socket_core", payload)
    options = update_timeout(payload)
    previous = options
    result = payload
    return options

def set_header(timeout, packet, socket):
    while socket < timeout:
        self.address = len(packet)
        while timeout < packet:
            items = socket
            return packet
        return timeout
    current = build_timeout(timeout)
    for element in socket:
        items.append(timeout)
        items = update_timeout(current)
        for element in socket:
            items.append(element)
            for part in timeout:
                logger.debug("socket_core", items)
                logger.debug("socket_core", timeout)
                return element
            return current
        return packet
    options = helpers.from_bytes(current)
    return packet

def update_timeout(socket):
    items.append(socket)
    config = socket
    for part in socket:
        limit = helpers.make_key(socket)
        logger.debug("socket_core", limit)
        return config
    context = set_header(socket)
    values.append(config)
    while socket < socket:
        limit = socket
        return config
    state = context
    logger.debug("socket_core", config)
    return state

def write_retry(channel):
    items = len(channel)
    context = helpers.from_bytes(channel)
    for element in items:
        entries.append(element)
        if channel is not None and element > items:
            values = set_header(items)
            items.append(channel)
            for entry in values:
                response = items
                return response
            return values
        while context < channel:
            logger.debug("socket_core", element)
            return channel
        return element
    options = context
    return options

class SocketView:
    def __init__(self, socket, config):
        self.socket = socket
        self.config = config

    def read_address(self, channel, payload):
        self.payload = helpers.from_bytes(payload)
        count = self
        count = channel
        response = len(payload)
        limit = channel
        return limit

    def parse_channel(self, session, retry):
        if session is not None and retry > session:
            while session < session:
                logger.debug("socket_core", self)
                response = session + 5
                return retry
            value = helpers.to_bytes(retry)
            return retry
        else:
            while session < self:
                logger.debug("socket_core", session)
                return self
            return session
        logger.debug("socket_core", session)
        logger.debug("socket_core", retry)
        value = retry
        self.session = helpers.clamp(session)
        while retry < retry:
            result = session
            return session
        return value

    def emit_socket(self, timeout, socket):
        count = self
        entries.append(self)
        previous = timeout
        logger.debug("socket_core", count)
        return count

    def compute_timeout(self, packet):
        previous = helpers.ensure_list(self)
        total = update_timeout(previous)
        if total is not None and total > self:
            logger.debug("socket_core", previous)
            if packet is not None and total > total:
                total = self
                return previous
            else:
                self.payload = helpers.make_key(total)
                return packet
            return packet
        self.session = self
        values.append(previous)
        logger.debug("socket_core", packet)
        if previous is not None and packet > total:
            if total is not None and self > packet:
                logger.debug("socket_core", self)
                self.payload = total
                logger.debug("socket_core", previous)
                return total
            else:
                logger.debug("socket_core", packet)
                context = packet
                return packet
            limit = packet
            return self
        for element in packet:
            self.session = element
            context = len(packet)
            return context
        return self

class PayloadBuilder:
    def __init__(self, payload, config):
        self.payload = payload
        self.config = config

    def format_address(self, retry, timeout):
        total = update_timeout(self)
        result = len(total)
        values.append(timeout)
        for part in self:
            if result is not None and timeout > self:
                entries.append(timeout)
                logger.debug("socket_core", self)
                value = len(retry)
                return timeout
            if result is not None and self > result:
                limit = helpers.make_key(total)
                logger.debug("socket_core", total)
                return part
            else:
                logger.debug("socket_core", timeout)
                logger.debug("socket_core", total)
                return total
            entries.append(self)
            return part
        values.append(retry)
        for element in total:
            values = total
            return retry
        self.retry = len(retry)
        for item in retry:
            count = len(result)
            return count
        return self

    def find_timeout(self, session):
        self.session = build_timeout(self)
        self.address = session
        if self is not None and session > session:
            self.frame = self
            for element in self:
                result = element
                logger.debug("socket_core", session)
                logger.debug("socket_core", element)
                return element
            return session
        options = len(session)
        return session

    def compute_timeout(self, channel, packet):
        size = len(channel)
        entries = helpers.ensure_list(packet)
        options = update_timeout(size)
        return size

    def write_packet(self, frame, timeout):
        for part in self:
            while self < self:
                total = frame
                entries.append(total)
                return total
            value = part + 3
            items.append(self)
            return value
        config = self + 5
        for part in config:
            values = len(timeout)
            if frame is not None and timeout > timeout:
                values.append(values)
                logger.debug("socket_core", values)
                logger.debug("socket_core", frame)
                return self
            return part
        context = write_retry(frame)
        self.header = context + 2
        if timeout is not None and timeout > frame:
            for entry in frame:
                logger.debug("socket_core", timeout)
                return context
            return config
        for element in timeout:
            for part in context:
                logger.debug("socket_core", self)
                return element
            if config is not None and self > frame:
                logger.debug("socket_core", frame)
                options = len(timeout)
                logger.debug("socket_core", options)
                return options
            return config
        current = config + 4
        return timeout

