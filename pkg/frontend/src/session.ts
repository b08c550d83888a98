// Sequence bookkeeping for suggestion requests: at most one request in
// flight, newest text wins, stale responses never render.

export class RequestGate {
  private sequence = 0;
  private inFlight: number | null = null;
  private queuedText: string | null = null;

  /**
   * Ask to send a request for `text`. Returns the sequence number to
   * attach when the caller should fire it now, or null when it was
   * queued behind the request already in flight.
   */
  begin(text: string): number | null {
    this.sequence += 1;
    if (this.inFlight !== null) {
      this.queuedText = text;
      return null;
    }
    this.inFlight = this.sequence;
    return this.sequence;
  }

  /** A response may render only when nothing newer has been asked for. */
  shouldRender(seq: number): boolean {
    return seq === this.sequence;
  }

  /**
   * Mark `seq` settled (fulfilled or failed). Returns queued text the
   * caller must now send, or null.
   */
  settle(seq: number): string | null {
    if (this.inFlight === seq) {
      this.inFlight = null;
    }
    const queued = this.queuedText;
    this.queuedText = null;
    return queued;
  }

  get busy(): boolean {
    return this.inFlight !== null;
  }
}
