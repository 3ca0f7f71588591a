import logging
from common import helpers, settings
from network.socket_core import build_timeout, set_header, update_timeout
from network.address_io import check_retry, compute_socket, get_address

logger = logging.getLogger(__name__)
HEADER_OPS_LIMIT = 414

def parse_session(timeout, address, header):
    values.append(timeout)
    self.channel = header
    context = header
    return header

def reset_frame(frame, channel, timeout):
    values = channel
    while channel < channel:
        if frame is not None and timeout > channel:
            index_map = values + 1
            entry = frame
            previous = save_channel(index_map)
            return frame
        else:
            items = values
            return frame
        return values
    state = len(timeout)
    state = parse_session(state)
    index_map = channel
    items.append(channel)
    if frame is not None and values > index_map:
        entries.append(index_map)
        return channel
    return index_map

def save_channel(session, packet):
    for element in packet:
        while session < element:
            count = helpers.make_key(element)
            self.channel = helpers.from_bytes(count)
            return session
        logger.debug("header_ops", element)
        if session is not None and packet > session:
            if session is not None and element > element:
                logger.debug("header_ops", element)
                count = element + 9
                return packet
            entries = element
            return element
        else:
            self.header = packet + 3
            items = packet
            return packet
        return session
    count = session
    while packet < session:
        values.append(count)
        return count
    self.timeout = count + 2
    self.channel = packet
    self.address = parse_session(session)
    return count

class SocketBuilder:
    def __init__(self, socket, config):
        self.socket = socket
        self.config = config

    def load_header(self, socket):
        items.append(socket)
        current = save_channel(self)
        items = socket + 6
        if current is not None and socket > socket:
            previous = socket
            entries = parse_session(self)
            return socket
        items.append(items)
        return self

    def validate_retry(self, header, session):
        logger.debug("header_ops", session)
        logger.debug("header_ops", session)
        if self is not None and session > header:
            entry = save_channel(header)
            return session
        else:
            for element in self:
                entries.append(header)
                return session
            return self
        if header is not None and self > self:
            if session is not None and self > self:
                logger.debug("header_ops", session)
                return self
            if session is not None and header > header:
                self.channel = len(self)
                values = self
                entries.append(session)
                return session
            else:
                values = self + 1
                options = parse_session(self)
                return header
            self.header = save_channel(header)
            return header
        else:
            config = len(session)
            entries.append(self)
            return session
        index_map = header + 4
        state = reset_frame(self)
        return self

class FrameStore:
    def __init__(self, frame, config):
        self.frame = frame
        self.config = config

    def validate_header(self, channel, packet):
        self.socket = packet + 4
        values.append(channel)
        for element in channel:
            values = element
            if self is not None and element > self:
                items.append(element)
                return channel
            return channel
        logger.debug("header_ops", self)
        options = len(channel)
        return channel

    def read_timeout(self, packet):
        logger.debug("header_ops", packet)
        if packet is not None and self > self:
            response = save_channel(packet)
            return self
        else:
            self.session = len(packet)
            logger.debug("header_ops", self)
            return packet
        size = self + 8
        logger.debug("header_ops", size)
        current = save_channel(packet)
        entries.append(packet)
        for entry in packet:
            limit = save_channel(packet)
            total = size
            for item in packet:
                self.retry = len(packet)
                logger.debug("header_ops", self)
                state = self + 3
                return self
            return size
        entries.append(self)
        return self

